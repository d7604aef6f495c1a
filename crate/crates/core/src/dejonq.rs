//! Virtual de Jonquières counts.
//!
//! Two independent evaluation paths are provided for the number of divisors
//! `a_1 x_1 + ... + a_e x_e` in a `g^r_d` when `e = d - r`:
//!
//! * [`bracket`] evaluates the classical bracket `[a_1 ... a_e]` in a
//!   division-free product form, using elementary symmetric polynomials.
//! * [`coefficient_count`] extracts the coefficient of `t_1 ... t_e` in
//!   `(1 + sum a_i^2 t_i)^g (1 + sum a_i t_i)^(d-r-g)` by summing over subsets.
//!
//! Both produce the *ordered* count; [`dj_count`] divides by `prod n_v!`.
//! The classical specializations (double points, Plücker, tangential
//! trisecants, odd theta characteristics) are closed forms cross-checked
//! against these in the tests.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{binomial, elementary_symmetric_all, falling_factorial, Partition};

/// Largest partition length accepted by the subset enumeration.
pub const MAX_PARTS: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DejonqError {
    #[error("partition must be nonempty")]
    EmptyPartition,
    #[error("contract violation: |mu| = {total} but d = {d}")]
    DegreeMismatch { total: u64, d: u32 },
    #[error("contract violation: l(mu) = {len} but d - r = {expected}")]
    LengthMismatch { len: usize, expected: i64 },
    #[error("partition has {len} parts; at most {MAX_PARTS} are supported")]
    TooManyParts { len: usize },
    #[error("integrality violation: ordered count {ordered} is not divisible by {divisor}")]
    Integrality { ordered: BigInt, divisor: BigInt },
    #[error("double-point count needs d >= 2r (got r = {r}, d = {d})")]
    TooFewPoints { r: u32, d: u32 },
    #[error("ramification check needs d >= r + 1 (got r = {r}, d = {d})")]
    DegreeTooSmall { r: u32, d: u32 },
    #[error("odd theta characteristics need g >= 1")]
    GenusTooSmall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EvalPath {
    Bracket,
    Coefficient,
    ClosedForm,
}

impl EvalPath {
    pub fn as_str(self) -> &'static str {
        match self {
            EvalPath::Bracket => "bracket",
            EvalPath::Coefficient => "coefficient",
            EvalPath::ClosedForm => "closed_form",
        }
    }
}

impl fmt::Display for EvalPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A count together with the path that produced it.
///
/// When `ordered` is false, `value * symmetry_factor` is the ordered count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigInt,
    pub path: EvalPath,
    pub ordered: bool,
    pub symmetry_factor: BigInt,
}

impl CountResult {
    pub fn ordered_value(&self) -> BigInt {
        if self.ordered {
            self.value.clone()
        } else {
            &self.value * &self.symmetry_factor
        }
    }
}

/// The bracket `[a_1 ... a_e]` at genus `g`.
///
/// Evaluated as
/// `prod(a_i) * sum_k (-1)^k e_{e-k}(a) * prod_{j in [g-e, g], j != g-e+k} j`,
/// i.e. the prefactor `g!/(g-e-1)!` is multiplied into each term before any
/// division could happen, so the poles at `g = e - k` never appear.
pub fn bracket(mu: &Partition, g: u32) -> Result<BigInt, DejonqError> {
    if mu.is_empty() {
        return Err(DejonqError::EmptyPartition);
    }
    let parts = mu.parts_i64();
    let e = parts.len() as i64;
    let g = i64::from(g);
    let sym = elementary_symmetric_all(&parts);
    let window: Vec<i64> = (g - e..=g).collect();

    let mut sum = BigInt::zero();
    for k in 0..=e {
        let skipped = g - e + k;
        let prefactor: BigInt = window
            .iter()
            .filter(|&&j| j != skipped)
            .map(|&j| BigInt::from(j))
            .product();
        let term = &sym[(e - k) as usize] * prefactor;
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let product: BigInt = parts.iter().map(|&a| BigInt::from(a)).product();
    Ok(product * sum)
}

fn check_degree_and_length(r: u32, d: u32, mu: &Partition) -> Result<(), DejonqError> {
    if mu.is_empty() {
        return Err(DejonqError::EmptyPartition);
    }
    if mu.total() != u64::from(d) {
        return Err(DejonqError::DegreeMismatch {
            total: mu.total(),
            d,
        });
    }
    let expected = i64::from(d) - i64::from(r);
    if mu.len() as i64 != expected {
        return Err(DejonqError::LengthMismatch {
            len: mu.len(),
            expected,
        });
    }
    if mu.len() > MAX_PARTS {
        return Err(DejonqError::TooManyParts { len: mu.len() });
    }
    Ok(())
}

/// Ordered count: the coefficient of `t_1 ... t_e` in
/// `(1 + sum a_i^2 t_i)^g (1 + sum a_i t_i)^(d-r-g)`.
///
/// Only multilinear terms matter, so the coefficient is
/// `sum_S (g)_{|S|} prod_{i in S} a_i^2 * (d-r-g)_{e-|S|} prod_{i not in S} a_i`
/// over subsets `S`, with `(x)_k` the falling factorial. A negative second
/// exponent is handled by the falling factorial directly. Subsets are visited
/// in increasing bitmask order.
pub fn coefficient_count(g: u32, r: u32, d: u32, mu: &Partition) -> Result<BigInt, DejonqError> {
    check_degree_and_length(r, d, mu)?;
    let second_exponent = i64::from(d) - i64::from(r) - i64::from(g);
    Ok(multilinear_coefficient(
        i64::from(g),
        second_exponent,
        &mu.parts_i64(),
    ))
}

/// Coefficient of `t_1 ... t_n` in `(1 + sum a_i^2 t_i)^first (1 + sum a_i t_i)^second`
/// for an arbitrary (not necessarily sorted) list of `a_i`, `n <= MAX_PARTS`.
pub(crate) fn multilinear_coefficient(
    first_exponent: i64,
    second_exponent: i64,
    parts: &[i64],
) -> BigInt {
    let e = parts.len();
    assert!(e <= MAX_PARTS);
    let first: Vec<BigInt> = (0..=e as u32)
        .map(|k| falling_factorial(first_exponent, k))
        .collect();
    let second: Vec<BigInt> = (0..=e as u32)
        .map(|k| falling_factorial(second_exponent, k))
        .collect();

    let mut total = BigInt::zero();
    for mask in 0u64..(1u64 << e) {
        let chosen = mask.count_ones() as usize;
        let mut term = &first[chosen] * &second[e - chosen];
        if term.is_zero() {
            continue;
        }
        for (i, &a) in parts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                term *= a * a;
            } else {
                term *= a;
            }
        }
        total += term;
    }
    total
}

fn unordered(ordered: BigInt, mu: &Partition, path: EvalPath) -> Result<CountResult, DejonqError> {
    let divisor = mu.symmetry_factor();
    let (value, rem) = ordered.div_rem(&divisor);
    if !rem.is_zero() {
        return Err(DejonqError::Integrality { ordered, divisor });
    }
    Ok(CountResult {
        value,
        path,
        ordered: false,
        symmetry_factor: divisor,
    })
}

/// Unordered de Jonquières count via the coefficient path.
pub fn dj_count(g: u32, r: u32, d: u32, mu: &Partition) -> Result<CountResult, DejonqError> {
    let ordered = coefficient_count(g, r, d, mu)?;
    unordered(ordered, mu, EvalPath::Coefficient)
}

/// Unordered de Jonquières count via the bracket path. Same preconditions as
/// [`dj_count`].
pub fn dj_count_bracket(
    g: u32,
    r: u32,
    d: u32,
    mu: &Partition,
) -> Result<CountResult, DejonqError> {
    check_degree_and_length(r, d, mu)?;
    let ordered = bracket(mu, g)?;
    unordered(ordered, mu, EvalPath::Bracket)
}

/// The partition `(2^r, 1^(d-2r))`.
pub fn double_point_partition(r: u32, d: u32) -> Result<Partition, DejonqError> {
    if d < 2 * r {
        return Err(DejonqError::TooFewPoints { r, d });
    }
    Ok(
        Partition::from_powers(&[(2, r as usize), (1, (d - 2 * r) as usize)])
            .expect("parts are positive"),
    )
}

/// The partition `(r+1, 1^(d-r-1))`.
pub fn ramification_partition(r: u32, d: u32) -> Result<Partition, DejonqError> {
    if d < r + 1 {
        return Err(DejonqError::DegreeTooSmall { r, d });
    }
    Ok(
        Partition::from_powers(&[(r + 1, 1), (1, (d - r - 1) as usize)])
            .expect("parts are positive"),
    )
}

/// Number of divisors with `r` double points:
/// `2^r * sum_{k=0}^{r} C(g, k) C(d-r-k, r-k)`.
pub fn double_point_count(g: u32, r: u32, d: u32) -> Result<BigInt, DejonqError> {
    if d < 2 * r {
        return Err(DejonqError::TooFewPoints { r, d });
    }
    let (g, r, d) = (i64::from(g), i64::from(r), i64::from(d));
    let sum: BigInt = (0..=r)
        .map(|k| binomial(g, k) * binomial(d - r - k, r - k))
        .sum();
    Ok(sum << r as usize)
}

/// Total ramification weight of a `g^r_d`: `(r+1)d + (r+1)r(g-1)`.
pub fn plucker_total(g: i64, r: i64, d: i64) -> BigInt {
    BigInt::from(r + 1) * d + BigInt::from(r + 1) * r * (g - 1)
}

/// `(dj_count(g, r, d, (r+1, 1^(d-r-1))), plucker_total(g, r, d))`.
/// The two entries agree.
pub fn ramification_count_check(g: u32, r: u32, d: u32) -> Result<(BigInt, BigInt), DejonqError> {
    let mu = ramification_partition(r, d)?;
    let count = dj_count(g, r, d, &mu)?;
    Ok((
        count.value,
        plucker_total(i64::from(g), i64::from(r), i64::from(d)),
    ))
}

/// Tangential trisecants of a space curve: `2(d-2)(d-3) + 2g(d-6)`.
/// A virtual number; negative outside the enumerative range.
pub fn tangential_trisecant_count(d: i64, g: i64) -> BigInt {
    BigInt::from(2 * (d - 2)) * (d - 3) + BigInt::from(2 * g) * (d - 6)
}

/// `2^(g-1) (2^g - 1)`.
pub fn odd_theta_count(g: u32) -> Result<BigInt, DejonqError> {
    if g < 1 {
        return Err(DejonqError::GenusTooSmall);
    }
    let g = g as usize;
    Ok((BigInt::one() << (g - 1)) * ((BigInt::one() << g) - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn mu(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Multilinear truncated power series in `t_1..t_e`: monomials are
    /// bitmasks, and any square `t_i^2` is dropped.
    #[derive(Clone, Debug)]
    struct Multilinear(BTreeMap<u32, BigInt>);

    impl Multilinear {
        fn one() -> Self {
            Self(BTreeMap::from([(0, BigInt::one())]))
        }

        fn linear(coeffs: &[i64]) -> Self {
            let mut m = Self::one();
            for (i, &c) in coeffs.iter().enumerate() {
                m.0.insert(1 << i, BigInt::from(c));
            }
            m
        }

        fn mul(&self, other: &Self) -> Self {
            let mut out = BTreeMap::new();
            for (&ma, ca) in &self.0 {
                for (&mb, cb) in &other.0 {
                    if ma & mb == 0 {
                        *out.entry(ma | mb).or_insert_with(BigInt::zero) += ca * cb;
                    }
                }
            }
            Self(out)
        }

        fn neg_linear_part(&self) -> Self {
            let mut out = self.clone();
            out.0.remove(&0);
            for c in out.0.values_mut() {
                *c = -c.clone();
            }
            out
        }

        /// `1 / (1 + L)` as `sum_k (-L)^k`, exact once `k` exceeds `e`.
        fn inverse_of_one_plus(&self, e: usize) -> Self {
            let minus_l = self.neg_linear_part();
            let mut sum = Self::one();
            let mut power = Self::one();
            for _ in 0..e {
                power = power.mul(&minus_l);
                for (&m, c) in &power.0 {
                    *sum.0.entry(m).or_insert_with(BigInt::zero) += c;
                }
            }
            sum
        }

        fn pow(&self, exp: i64, e: usize) -> Self {
            let base = if exp < 0 {
                self.inverse_of_one_plus(e)
            } else {
                self.clone()
            };
            let mut acc = Self::one();
            for _ in 0..exp.abs() {
                acc = acc.mul(&base);
            }
            acc
        }
    }

    /// Full expansion of the generating polynomial, read off at `t_1...t_e`.
    fn expansion_oracle(g: u32, r: u32, d: u32, parts: &[i64]) -> BigInt {
        let e = parts.len();
        let squares: Vec<i64> = parts.iter().map(|a| a * a).collect();
        let first = Multilinear::linear(&squares).pow(i64::from(g), e);
        let exponent = i64::from(d) - i64::from(r) - i64::from(g);
        let second = Multilinear::linear(parts).pow(exponent, e);
        let full = (1u32 << e) - 1;
        first.mul(&second).0.get(&full).cloned().unwrap_or_default()
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(bracket(&mu("2,2"), 3).unwrap(), BigInt::from(56));
        assert_eq!(bracket(&mu("2,2"), 1).unwrap(), BigInt::from(16));
        assert_eq!(bracket(&mu("1"), 0).unwrap(), BigInt::from(1));
        assert_eq!(
            bracket(&Partition::new(vec![]).unwrap(), 3),
            Err(DejonqError::EmptyPartition)
        );
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(
            coefficient_count(3, 2, 4, &mu("2,2")).unwrap(),
            BigInt::from(56)
        );
        assert_eq!(
            coefficient_count(1, 1, 2, &mu("2")).unwrap(),
            BigInt::from(4)
        );
        assert_eq!(
            coefficient_count(0, 1, 2, &mu("2")).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn coefficient_count_contract_violations() {
        assert_eq!(
            coefficient_count(3, 2, 5, &mu("2,2")),
            Err(DejonqError::DegreeMismatch { total: 4, d: 5 })
        );
        assert_eq!(
            coefficient_count(3, 1, 4, &mu("2,2")),
            Err(DejonqError::LengthMismatch {
                len: 2,
                expected: 3
            })
        );
        let long = Partition::new(vec![1; 63]).unwrap();
        assert_eq!(
            coefficient_count(0, 0, 63, &long),
            Err(DejonqError::TooManyParts { len: 63 })
        );
    }

    #[test]
    fn dj_count_examples() {
        let c = dj_count(3, 2, 4, &mu("2,2")).unwrap();
        assert_eq!(c.value, BigInt::from(28));
        assert_eq!(c.ordered_value(), BigInt::from(56));
        assert!(!c.ordered);
        assert_eq!(c.path, EvalPath::Coefficient);
        assert_eq!(
            dj_count(4, 3, 6, &mu("2,2,2")).unwrap().value,
            BigInt::from(120)
        );
        assert_eq!(dj_count(1, 1, 2, &mu("2")).unwrap().value, BigInt::from(4));
        let b = dj_count_bracket(3, 2, 4, &mu("2,2")).unwrap();
        assert_eq!((b.value, b.path), (BigInt::from(28), EvalPath::Bracket));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(double_point_count(3, 2, 4).unwrap(), BigInt::from(28));
        assert_eq!(double_point_count(4, 3, 6).unwrap(), BigInt::from(120));
        assert_eq!(double_point_count(0, 1, 2).unwrap(), BigInt::from(2));
        assert_eq!(
            double_point_count(0, 3, 5),
            Err(DejonqError::TooFewPoints { r: 3, d: 5 })
        );

        assert_eq!(plucker_total(0, 1, 2), BigInt::from(2));
        assert_eq!(plucker_total(1, 1, 2), BigInt::from(4));
        assert_eq!(plucker_total(0, 2, 2), BigInt::from(0));

        assert_eq!(tangential_trisecant_count(6, 4), BigInt::from(24));
        assert_eq!(tangential_trisecant_count(6, 0), BigInt::from(24));
        assert_eq!(tangential_trisecant_count(2, 0), BigInt::from(0));

        assert_eq!(odd_theta_count(3).unwrap(), BigInt::from(28));
        assert_eq!(odd_theta_count(4).unwrap(), BigInt::from(120));
        assert_eq!(odd_theta_count(1).unwrap(), BigInt::from(1));
        assert_eq!(odd_theta_count(0), Err(DejonqError::GenusTooSmall));
    }

    #[test]
    fn ramification_check_examples() {
        let two = |a: i64, b: i64| (BigInt::from(a), BigInt::from(b));
        assert_eq!(ramification_count_check(0, 1, 2).unwrap(), two(2, 2));
        assert_eq!(ramification_count_check(1, 1, 2).unwrap(), two(4, 4));
        let (left, right) = ramification_count_check(3, 2, 4).unwrap();
        assert_eq!(right, BigInt::from(24));
        assert_eq!(left, right);
        assert_eq!(
            ramification_count_check(0, 3, 3),
            Err(DejonqError::DegreeTooSmall { r: 3, d: 3 })
        );
    }

    #[test]
    fn coefficient_matches_full_expansion() {
        // e <= 3, parts <= 4, g <= 5, exponent d-r-g = e-g covering negatives.
        for e in 1..=3usize {
            for code in 0..4usize.pow(e as u32) {
                let parts: Vec<u32> = (0..e)
                    .map(|i| ((code / 4usize.pow(i as u32)) % 4 + 1) as u32)
                    .collect();
                let p = Partition::new(parts).unwrap();
                let d = p.total() as u32;
                let r = d - e as u32;
                for g in 0..=5 {
                    let oracle = expansion_oracle(g, r, d, &p.parts_i64());
                    assert_eq!(
                        coefficient_count(g, r, d, &p).unwrap(),
                        oracle,
                        "mu={p} g={g}"
                    );
                }
            }
        }
    }

    #[test]
    fn bracket_matches_coefficient_exhaustively() {
        fn walk(prefix: &mut Vec<u32>, max_part: u32, out: &mut Vec<Partition>) {
            if !prefix.is_empty() {
                out.push(Partition::new(prefix.clone()).unwrap());
            }
            if prefix.len() == 6 {
                return;
            }
            for a in 1..=max_part {
                prefix.push(a);
                walk(prefix, a, out);
                prefix.pop();
            }
        }
        let mut all = Vec::new();
        walk(&mut Vec::new(), 4, &mut all);
        for p in &all {
            let d = p.total() as u32;
            let r = d - p.len() as u32;
            for g in 0..=8 {
                let ordered = coefficient_count(g, r, d, p).unwrap();
                assert_eq!(bracket(p, g).unwrap(), ordered, "mu={p} g={g}");
                assert!(dj_count(g, r, d, p).is_ok(), "integrality mu={p} g={g}");
            }
        }
    }

    #[test]
    fn double_point_and_plucker_grids() {
        for g in 0..=6 {
            for r in 1..=4 {
                for d in 2 * r..=10 {
                    let p = double_point_partition(r, d).unwrap();
                    assert_eq!(
                        dj_count(g, r, d, &p).unwrap().value,
                        double_point_count(g, r, d).unwrap(),
                        "g={g} r={r} d={d}"
                    );
                }
                for d in r + 1..=10 {
                    let (a, b) = ramification_count_check(g, r, d).unwrap();
                    assert_eq!(a, b, "g={g} r={r} d={d}");
                }
            }
        }
    }

    #[test]
    fn odd_theta_from_dj_count() {
        for g in 2..=5u32 {
            let p = Partition::from_powers(&[(2, (g - 1) as usize)]).unwrap();
            assert_eq!(
                dj_count(g, g - 1, 2 * g - 2, &p).unwrap().value,
                odd_theta_count(g).unwrap()
            );
        }
    }

    proptest! {
        #[test]
        fn coefficient_ignores_part_order(
            parts in prop::collection::vec(1i64..=5, 1..7),
            g in 0i64..8,
            shift in 0usize..7,
        ) {
            let e = parts.len() as i64;
            let mut permuted = parts.clone();
            permuted.rotate_left(shift % parts.len());
            permuted.swap(0, parts.len() - 1);
            prop_assert_eq!(
                multilinear_coefficient(g, e - g, &parts),
                multilinear_coefficient(g, e - g, &permuted)
            );
            let canonical = Partition::new(parts.iter().map(|&a| a as u32).collect()).unwrap();
            let d = canonical.total() as u32;
            prop_assert_eq!(
                coefficient_count(g as u32, d - e as u32, d, &canonical).unwrap(),
                multilinear_coefficient(g, e - g, &permuted)
            );
        }
    }
}
