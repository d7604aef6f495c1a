//! Vanishing and ramification sequences of (limit) linear series.
//!
//! Sequences are validated once, at construction, against their `(r, d)`
//! context. The aggregated dimension count used in the degeneration argument
//! is exposed as [`proof_identity`], a polynomial identity in six integers.

use thiserror::Error;

use crate::bn::{rho_unchecked, SeriesParams};
use crate::exact::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LlsError {
    #[error("sequence must have at least one entry")]
    Empty,
    #[error("vanishing orders must be strictly increasing: {0:?}")]
    NotStrictlyIncreasing(Vec<i64>),
    #[error("ramification indices must be weakly increasing: {0:?}")]
    NotWeaklyIncreasing(Vec<i64>),
    #[error("entry {value} outside [0, {max}]")]
    OutOfBounds { value: i64, max: i64 },
    #[error("sequences live in different contexts: (r, d) = {left:?} vs {right:?}")]
    ContextMismatch { left: (u32, u32), right: (u32, u32) },
    #[error("selection has {got} indices, expected {expected}")]
    SplitSize { expected: i64, got: usize },
    #[error("index {index} out of range for a sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("index {0} selected twice")]
    DuplicateIndex(usize),
    #[error("{0}")]
    Range(String),
}

/// `0 <= a_0 < a_1 < ... < a_r <= d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VanishingSequence {
    entries: Vec<i64>,
    d: u32,
}

impl VanishingSequence {
    /// `r` is taken to be `entries.len() - 1`.
    pub fn new(entries: Vec<i64>, d: u32) -> Result<Self, LlsError> {
        if entries.is_empty() {
            return Err(LlsError::Empty);
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(LlsError::NotStrictlyIncreasing(entries));
        }
        let max = i64::from(d);
        if let Some(&value) = entries.iter().find(|&&a| a < 0 || a > max) {
            return Err(LlsError::OutOfBounds { value, max });
        }
        Ok(Self { entries, d })
    }

    /// The unramified sequence `(0, 1, ..., r)`.
    pub fn generic(r: u32, d: u32) -> Result<Self, LlsError> {
        Self::new((0..=i64::from(r)).collect(), d)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn r(&self) -> u32 {
        (self.entries.len() - 1) as u32
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn context(&self) -> (u32, u32) {
        (self.r(), self.d)
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }
}

/// `0 <= alpha_0 <= ... <= alpha_r <= d - r`. Also used for Schubert indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RamificationSequence {
    entries: Vec<i64>,
    d: u32,
}

impl RamificationSequence {
    pub fn new(entries: Vec<i64>, d: u32) -> Result<Self, LlsError> {
        if entries.is_empty() {
            return Err(LlsError::Empty);
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(LlsError::NotWeaklyIncreasing(entries));
        }
        let max = i64::from(d) - (entries.len() as i64 - 1);
        if let Some(&value) = entries.iter().find(|&&a| a < 0 || a > max) {
            return Err(LlsError::OutOfBounds { value, max });
        }
        Ok(Self { entries, d })
    }

    pub fn zero(r: u32, d: u32) -> Result<Self, LlsError> {
        Self::new(vec![0; r as usize + 1], d)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn r(&self) -> u32 {
        (self.entries.len() - 1) as u32
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn context(&self) -> (u32, u32) {
        (self.r(), self.d)
    }
}

/// `alpha_i = a_i - i`.
pub fn ramification_from_vanishing(a: &VanishingSequence) -> RamificationSequence {
    let entries = a
        .entries
        .iter()
        .enumerate()
        .map(|(i, &v)| v - i as i64)
        .collect();
    RamificationSequence::new(entries, a.d)
        .expect("a valid vanishing sequence has a valid ramification sequence")
}

/// `a_i = alpha_i + i`.
pub fn vanishing_from_ramification(alpha: &RamificationSequence) -> VanishingSequence {
    let entries = alpha
        .entries
        .iter()
        .enumerate()
        .map(|(i, &v)| v + i as i64)
        .collect();
    VanishingSequence::new(entries, alpha.d)
        .expect("a valid ramification sequence has a valid vanishing sequence")
}

/// Ramification weight `sum alpha_i`.
pub fn weight(alpha: &RamificationSequence) -> i64 {
    alpha.entries.iter().sum()
}

/// The sequence `b` with `b_{r-i} = d - a_i`, i.e. the vanishing orders that
/// pair with `a` across a node.
pub fn complementary_vanishing(a: &VanishingSequence) -> VanishingSequence {
    let d = i64::from(a.d);
    let entries = a.entries.iter().rev().map(|&v| d - v).collect();
    VanishingSequence::new(entries, a.d).expect("complement of a valid sequence is valid")
}

/// True iff `a_i + b_{r-i} = d` for every `i`.
pub fn is_refined_pair(a: &VanishingSequence, b: &VanishingSequence) -> Result<bool, LlsError> {
    if a.context() != b.context() {
        return Err(LlsError::ContextMismatch {
            left: a.context(),
            right: b.context(),
        });
    }
    let d = i64::from(a.d);
    Ok(a.entries
        .iter()
        .zip(b.entries.iter().rev())
        .all(|(x, y)| x + y == d))
}

/// Selected entries and their complement, both in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split {
    pub sub: Vec<i64>,
    pub complement: Vec<i64>,
}

/// Splits `a` into the entries at `selected` and the rest.
///
/// The selection must have exactly `r + 1 - mu_total + f` distinct indices,
/// the rank of the residual series.
pub fn split_sequence(
    a: &VanishingSequence,
    selected: &[usize],
    mu_total: i64,
    f: i64,
) -> Result<Split, LlsError> {
    let len = a.entries.len();
    let expected = i64::from(a.r()) + 1 - mu_total + f;
    if expected < 0 || selected.len() as i64 != expected {
        return Err(LlsError::SplitSize {
            expected,
            got: selected.len(),
        });
    }
    let mut mask = vec![false; len];
    for &index in selected {
        if index >= len {
            return Err(LlsError::IndexOutOfRange { index, len });
        }
        if mask[index] {
            return Err(LlsError::DuplicateIndex(index));
        }
        mask[index] = true;
    }
    let (sub, complement): (Vec<_>, Vec<_>) = a.entries.iter().zip(&mask).partition(|(_, &m)| m);
    Ok(Split {
        sub: sub.into_iter().map(|(&v, _)| v).collect(),
        complement: complement.into_iter().map(|(&v, _)| v).collect(),
    })
}

/// True iff `sum b + sum sub + sum complement = (r + 1) d`.
pub fn additivity_check(
    b: &VanishingSequence,
    sub: &[i64],
    complement: &[i64],
    r: i64,
    d: i64,
) -> bool {
    b.sum() + sub.iter().sum::<i64>() + complement.iter().sum::<i64>() == (r + 1) * d
}

/// The smallest vanishing sequence at a point where all `e` points of a
/// generalized de Jonquières divisor have come together:
/// `(0, 1, ..., |mu|-f-1, |mu|, |mu|+1, ..., r+f)`.
///
/// Its weight is `f (r + 1 - |mu| + f)`.
pub fn case_ii_min_sequence(
    mu: &Partition,
    f: i64,
    r: u32,
    d: u32,
) -> Result<VanishingSequence, LlsError> {
    let total = mu.total() as i64;
    let r = i64::from(r);
    if f < 0 || f < total - r || f > total {
        return Err(LlsError::Range(format!(
            "f = {f} outside [max(0, |mu| - r), |mu|] = [{}, {total}]",
            (total - r).max(0)
        )));
    }
    if r + f > i64::from(d) {
        return Err(LlsError::Range(format!(
            "r + f = {} exceeds d = {d}",
            r + f
        )));
    }
    let entries = (0..=r)
        .map(|i| if i < total - f { i } else { i + f })
        .collect();
    VanishingSequence::new(entries, d)
}

/// Both sides of the dimension count obtained by adding the three adjusted
/// Brill–Noether inequalities on the two halves of a flag curve:
///
/// `lhs = rho(g-m, r, d) + rho(m, r-|mu|+f, d-|mu|) + rho(m, |mu|-f-1, d)
///        - (r+1)d + C(r+1, 2) + C(r+1-|mu|+f, 2) + C(|mu|-f, 2)`
///
/// `rhs = rho(g, r, d) - f(r+1-|mu|+f) + m`
///
/// These agree for all integers; `rho` is the raw polynomial here.
pub fn proof_identity(g: i64, m: i64, r: i64, d: i64, mu_total: i64, f: i64) -> (i64, i64) {
    // n(n-1) is always even, so this is exact for negative n too.
    let choose2 = |n: i64| n * (n - 1) / 2;
    let residual = r + 1 - mu_total + f;
    let lhs = rho_unchecked(g - m, r, d)
        + rho_unchecked(m, r - mu_total + f, d - mu_total)
        + rho_unchecked(m, mu_total - f - 1, d)
        - (r + 1) * d
        + choose2(r + 1)
        + choose2(residual)
        + choose2(mu_total - f);
    let rhs = rho_unchecked(g, r, d) - f * residual + m;
    (lhs, rhs)
}

/// True iff the weights of `sequences` add up to `(r+1)d + (r+1)r(g-1)`.
pub fn plucker_identity_check(
    sequences: &[RamificationSequence],
    params: &SeriesParams,
) -> Result<bool, LlsError> {
    let context = (params.r(), params.d());
    if let Some(bad) = sequences.iter().find(|s| s.context() != context) {
        return Err(LlsError::ContextMismatch {
            left: bad.context(),
            right: context,
        });
    }
    let (g, r, d) = params.as_i64();
    let total: i64 = sequences.iter().map(weight).sum();
    Ok(total == (r + 1) * d + (r + 1) * r * (g - 1))
}
