//! Exact integer combinatorics: falling factorials, generalized binomials,
//! elementary symmetric polynomials and canonical partitions.
//!
//! Everything here works over [`BigInt`]; nothing touches floating point.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("elementary symmetric degree {degree} exceeds the number of values {len}")]
    DegreeTooLarge { degree: usize, len: usize },
    #[error("partition parts must be positive")]
    NonPositivePart,
    #[error("malformed partition `{input}`: {reason}")]
    Malformed { input: String, reason: String },
}

/// `x (x-1) ... (x-k+1)`, with the empty product equal to 1.
///
/// Negative `x` is allowed; this is what makes the generalized binomial
/// series work for negative exponents.
pub fn falling_factorial(x: i64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    let x = BigInt::from(x);
    for i in 0..k {
        acc *= &x - i;
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Generalized binomial coefficient `m choose k`.
///
/// Zero for `k < 0`. For `k >= 0` this is `falling_factorial(m, k) / k!`,
/// which stays meaningful for negative `m` (e.g. `(-1 choose 2) = 1`).
pub fn binomial(m: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let k = u32::try_from(k).expect("binomial lower index out of range");
    falling_factorial(m, k) / factorial(k)
}

/// `e_j(values)`: the sum over all `j`-element sub-multisets of the product
/// of their entries.
pub fn elementary_symmetric(values: &[i64], j: usize) -> Result<BigInt, ExactError> {
    if j > values.len() {
        return Err(ExactError::DegreeTooLarge {
            degree: j,
            len: values.len(),
        });
    }
    Ok(elementary_symmetric_all(values).swap_remove(j))
}

/// All of `e_0, ..., e_n` at once, from the coefficients of `prod (1 + v t)`.
pub fn elementary_symmetric_all(values: &[i64]) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); values.len() + 1];
    coeffs[0] = BigInt::one();
    for (n, &v) in values.iter().enumerate() {
        for j in (1..=n + 1).rev() {
            let term = &coeffs[j - 1] * v;
            coeffs[j] += term;
        }
    }
    coeffs
}

/// A partition `mu = (a_1, ..., a_e)` of positive contact orders, kept in
/// weakly decreasing order.
///
/// The derived `Ord` compares canonical part lists lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Canonicalizes `parts`; input order does not matter.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, ExactError> {
        if parts.contains(&0) {
            return Err(ExactError::NonPositivePart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// Builds `(v_1^{n_1}, v_2^{n_2}, ...)` from `(value, count)` pairs.
    pub fn from_powers(powers: &[(u32, usize)]) -> Result<Self, ExactError> {
        let parts = powers
            .iter()
            .flat_map(|&(v, n)| std::iter::repeat_n(v, n))
            .collect();
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `e = l(mu)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|mu|`.
    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&a| u64::from(a)).sum()
    }

    /// `n_v` for each distinct part `v`.
    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut profile = BTreeMap::new();
        for &a in &self.parts {
            *profile.entry(a).or_insert(0) += 1;
        }
        profile
    }

    /// `prod_v n_v!`, the order of the stabilizer of the part list.
    pub fn symmetry_factor(&self) -> BigInt {
        self.multiplicities()
            .values()
            .map(|&n| factorial(n as u32))
            .product()
    }

    pub fn parts_i64(&self) -> Vec<i64> {
        self.parts.iter().map(|&a| i64::from(a)).collect()
    }

    /// Power notation, e.g. `3,2^2,1^4`.
    pub fn to_power_string(&self) -> String {
        self.multiplicities()
            .iter()
            .rev()
            .map(|(&v, &n)| {
                if n == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{n}")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Accepts `2,2,1`, `2^2,1` and mixtures; whitespace and one pair of
/// surrounding parentheses are ignored.
impl FromStr for Partition {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = |reason: &str| ExactError::Malformed {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(&body);
        if body.is_empty() {
            return Err(malformed("empty partition"));
        }
        let mut parts = Vec::new();
        for term in body.split(',') {
            let (base, exp) = match term.split_once('^') {
                Some((b, e)) => (b, e),
                None => (term, "1"),
            };
            let base: u32 = base
                .parse()
                .map_err(|_| malformed(&format!("bad part `{term}`")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| malformed(&format!("bad exponent in `{term}`")))?;
            if base == 0 {
                return Err(ExactError::NonPositivePart);
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Self::new(parts)
    }
}
