//! Brill–Noether numbers and expected dimensions of generalized de Jonquières
//! loci on a general curve.
//!
//! For a general curve of genus `g` with `rho(g, r, d) >= 0`, every component
//! of the incidence `Sigma^f_mu = {(l, x_1..x_e)}` has dimension
//! `rho + e - f(r + 1 - |mu| + f)`; when that is negative the locus is empty
//! for every `g^r_d`. The corollary predicates below are the classical
//! specializations of that statement, each written as the original integer
//! inequality so it can be checked against the general formula.
//!
//! Predicates answer "is the configuration forbidden?": `true` means empty.

use thiserror::Error;

use crate::exact::Partition;
use crate::lls::{weight, RamificationSequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BnError {
    #[error("series parameters need r >= 1 and d >= 1 (got g = {g}, r = {r}, d = {d})")]
    InvalidParams { g: u32, r: u32, d: u32 },
    #[error("hypothesis rho(g, r, d) >= 0 fails: rho = {rho}")]
    NegativeRho { rho: i64 },
    #[error("f = {f} outside the admissible range [{lo}, {hi}]")]
    FOutOfRange { f: i64, lo: i64, hi: i64 },
    #[error("partition must be nonempty")]
    EmptyPartition,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("ramification sequence has context (r, d) = {got:?}, expected {expected:?}")]
    ContextMismatch {
        got: (u32, u32),
        expected: (u32, u32),
    },
}

/// A `g^r_d` on a curve of genus `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeriesParams {
    g: u32,
    r: u32,
    d: u32,
}

impl SeriesParams {
    pub fn new(g: u32, r: u32, d: u32) -> Result<Self, BnError> {
        if r < 1 || d < 1 {
            return Err(BnError::InvalidParams { g, r, d });
        }
        Ok(Self { g, r, d })
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn as_i64(&self) -> (i64, i64, i64) {
        (i64::from(self.g), i64::from(self.r), i64::from(self.d))
    }
}

/// `g - (r+1)(g - d + r)` with no range checks.
pub fn rho_unchecked(g: i64, r: i64, d: i64) -> i64 {
    g - (r + 1) * (g - d + r)
}

/// Brill–Noether number `rho(g, r, d)`.
pub fn rho(params: &SeriesParams) -> i64 {
    let (g, r, d) = params.as_i64();
    rho_unchecked(g, r, d)
}

fn require_nonnegative_rho(params: &SeriesParams) -> Result<i64, BnError> {
    match rho(params) {
        rho if rho < 0 => Err(BnError::NegativeRho { rho }),
        rho => Ok(rho),
    }
}

/// Adjusted Brill–Noether number `rho(g, r, d) - wt(alpha)`.
pub fn rho_adjusted(params: &SeriesParams, alpha: &RamificationSequence) -> Result<i64, BnError> {
    let expected = (params.r, params.d);
    if alpha.context() != expected {
        return Err(BnError::ContextMismatch {
            got: alpha.context(),
            expected,
        });
    }
    Ok(rho(params) - weight(alpha))
}

/// A generalized de Jonquières locus `DJ^f_mu` for a `g^r_d`: the tuples
/// `(x_1, ..., x_e)` with `dim |V(-sum a_i x_i)| >= r - |mu| + f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DJProblem {
    params: SeriesParams,
    mu: Partition,
    f: i64,
}

impl DJProblem {
    /// Requires `max(0, |mu| - r) <= f <= |mu|` and a nonempty `mu`.
    pub fn new(params: SeriesParams, mu: Partition, f: i64) -> Result<Self, BnError> {
        if mu.is_empty() {
            return Err(BnError::EmptyPartition);
        }
        let total = mu.total() as i64;
        let lo = (total - i64::from(params.r)).max(0);
        if f < lo || f > total {
            return Err(BnError::FOutOfRange { f, lo, hi: total });
        }
        Ok(Self { params, mu, f })
    }

    pub fn params(&self) -> &SeriesParams {
        &self.params
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn f(&self) -> i64 {
        self.f
    }

    /// `r + 1 - |mu| + f`, the dimension of the residual vector space.
    pub fn residual_rank(&self) -> i64 {
        i64::from(self.params.r) + 1 - self.mu.total() as i64 + self.f
    }
}

/// `e - f(r + 1 - |mu| + f)`: the expected dimension for one fixed series.
pub fn expected_dim_fixed_series(p: &DJProblem) -> i64 {
    p.mu.len() as i64 - p.f * p.residual_rank()
}

/// `rho(g, r, d) + e - f(r + 1 - |mu| + f)`, the dimension of every component
/// of `Sigma^f_mu` on a general curve. Requires `rho >= 0`.
pub fn expected_dim_sigma(p: &DJProblem) -> Result<i64, BnError> {
    let rho = require_nonnegative_rho(&p.params)?;
    Ok(rho + expected_dim_fixed_series(p))
}

/// True when `DJ^f_mu(C, l)` is empty for every `l` on a general curve.
pub fn is_empty_for_general_curve(p: &DJProblem) -> Result<bool, BnError> {
    Ok(expected_dim_sigma(p)? < 0)
}

/// `|mu| - f - 1`: projective dimension of the span of the osculating
/// planes `<a_1 x_1, ..., a_e x_e>`.
pub fn span_dimension(mu: &Partition, f: i64) -> i64 {
    mu.total() as i64 - f - 1
}

/// Inverse of [`span_dimension`]: the `f` giving a span of dimension `span`.
pub fn f_for_span(mu: &Partition, span: i64) -> i64 {
    mu.total() as i64 - span - 1
}

fn precondition(ok: bool, what: impl FnOnce() -> String) -> Result<(), BnError> {
    if ok {
        Ok(())
    } else {
        Err(BnError::Precondition(what()))
    }
}

/// `mu = (2, 1^(e-1))`, `f = 1`: a tangential `(e+1)`-secant.
pub fn tangential_secant_problem(params: SeriesParams, e: u32) -> Result<DJProblem, BnError> {
    precondition(e >= 1 && e <= params.r, || {
        format!("need 1 <= e <= r, got e = {e}, r = {}", params.r)
    })?;
    let mu = Partition::from_powers(&[(2, 1), (1, e as usize - 1)]).expect("positive parts");
    DJProblem::new(params, mu, 1)
}

/// No tangential `(e+1)`-secant when `2e < r + 1 - rho`.
pub fn corollary_tangential_secant(params: &SeriesParams, e: u32) -> Result<bool, BnError> {
    let rho = require_nonnegative_rho(params)?;
    precondition(e >= 1 && e <= params.r, || {
        format!("need 1 <= e <= r, got e = {e}, r = {}", params.r)
    })?;
    let (_, r, _) = params.as_i64();
    Ok(2 * i64::from(e) < r + 1 - rho)
}

/// `mu = (2^e)`, `f = 1`: a degenerate `e`-tangent.
pub fn degenerate_tangent_problem(params: SeriesParams, e: u32) -> Result<DJProblem, BnError> {
    precondition(
        e >= 1 && 2 * i64::from(e) - i64::from(params.r) <= 1,
        || format!("need e >= 1 and 2e - r <= 1, got e = {e}, r = {}", params.r),
    )?;
    DJProblem::new(
        params,
        Partition::from_powers(&[(2, e as usize)]).expect("positive parts"),
        1,
    )
}

/// No degenerate `e`-tangent when `3e < r + 2 - rho`.
pub fn corollary_degenerate_tangents(params: &SeriesParams, e: u32) -> Result<bool, BnError> {
    let rho = require_nonnegative_rho(params)?;
    let (_, r, _) = params.as_i64();
    let e = i64::from(e);
    precondition(e >= 1 && 2 * e - r <= 1, || {
        format!("need e >= 1 and 2e - r <= 1, got e = {e}, r = {r}")
    })?;
    Ok(3 * e < r + 2 - rho)
}

/// `mu = (2^e)`, `f = 2e - r`: `e` points spanning a tangent hyperplane.
pub fn tangent_hyperplane_problem(params: SeriesParams, e: u32) -> Result<DJProblem, BnError> {
    precondition(params.r >= 3 && e > params.r, || {
        format!("need r >= 3 and e >= r + 1, got e = {e}, r = {}", params.r)
    })?;
    let f = 2 * i64::from(e) - i64::from(params.r);
    DJProblem::new(
        params,
        Partition::from_powers(&[(2, e as usize)]).expect("positive parts"),
        f,
    )
}

/// Dimension `rho + r - e` of the family of series admitting an `e`-secant
/// tangent hyperplane. A negative value means no such series exists.
pub fn corollary_tangent_hyperplane_dim(params: &SeriesParams, e: u32) -> Result<i64, BnError> {
    let rho = require_nonnegative_rho(params)?;
    precondition(params.r >= 3 && e > params.r, || {
        format!("need r >= 3 and e >= r + 1, got e = {e}, r = {}", params.r)
    })?;
    Ok(rho + i64::from(params.r) - i64::from(e))
}

/// `mu = (a1, a2)`, `f = a1 + a2 - 2`: a secant line with contact orders
/// `a1`, `a2`.
pub fn flex_bitangent_problem(
    params: SeriesParams,
    a1: u32,
    a2: u32,
) -> Result<DJProblem, BnError> {
    precondition(params.r >= 3 && a1 >= 1 && a2 >= 1, || {
        format!(
            "need r >= 3 and a1, a2 >= 1, got r = {}, a1 = {a1}, a2 = {a2}",
            params.r
        )
    })?;
    let f = i64::from(a1) + i64::from(a2) - 2;
    DJProblem::new(
        params,
        Partition::new(vec![a1, a2]).expect("positive parts"),
        f,
    )
}

/// No such secant line when `a1 + a2 > (rho + 2r) / (r - 1)`, compared as
/// `(a1 + a2)(r - 1) > rho + 2r`.
pub fn corollary_flex_bitangent(params: &SeriesParams, a1: u32, a2: u32) -> Result<bool, BnError> {
    let rho = require_nonnegative_rho(params)?;
    precondition(params.r >= 3 && a1 >= 1 && a2 >= 1, || {
        format!(
            "need r >= 3 and a1, a2 >= 1, got r = {}, a1 = {a1}, a2 = {a2}",
            params.r
        )
    })?;
    let (_, r, _) = params.as_i64();
    Ok((i64::from(a1) + i64::from(a2)) * (r - 1) > rho + 2 * r)
}

/// `mu = (a)`, `f = a + 1 - r`: a point `x` with `l(-a x)` a pencil.
pub fn total_ramification_problem(params: SeriesParams, a: u32) -> Result<DJProblem, BnError> {
    precondition(a >= params.r, || {
        format!("need a >= r, got a = {a}, r = {}", params.r)
    })?;
    let f = i64::from(a) + 1 - i64::from(params.r);
    DJProblem::new(params, Partition::new(vec![a]).expect("positive part"), f)
}

/// No point `x` with `l(-a x)` a pencil when `2a > rho - 1 + 2r`.
pub fn corollary_total_ramification(params: &SeriesParams, a: u32) -> Result<bool, BnError> {
    let rho = require_nonnegative_rho(params)?;
    precondition(a >= params.r, || {
        format!("need a >= r, got a = {a}, r = {}", params.r)
    })?;
    let (_, r, _) = params.as_i64();
    Ok(2 * i64::from(a) > rho - 1 + 2 * r)
}

/// The canonical-series reading of [`corollary_total_ramification`]: on a
/// general curve of genus `g`, `h^0(O(a x)) <= a + 2 - g` for every point `x`
/// once `a >= g - 1`. Returns that bound, or `None` when `a < g - 1`.
pub fn canonical_h0_bound(g: u32, a: u32) -> Option<i64> {
    let (g, a) = (i64::from(g), i64::from(a));
    (a >= g - 1).then_some(a + 2 - g)
}
