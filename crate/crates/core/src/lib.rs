//! Exact de Jonquières counts and Brill–Noether dimension theory for linear
//! series on algebraic curves.
//!
//! * [`exact`]: big-integer combinatorics and partitions.
//! * [`dejonq`]: virtual counts of divisors with prescribed multiplicities,
//!   evaluated along two independent paths.
//! * [`bn`]: Brill–Noether numbers, expected dimensions of generalized
//!   de Jonquières loci and emptiness predicates for general curves.
//! * [`lls`]: vanishing/ramification sequences of limit linear series.
//! * [`cli`]: the `dejonq` command-line front end.

pub mod bn;
pub mod cli;
pub mod dejonq;
pub mod exact;
pub mod lls;

pub use bn::{DJProblem, SeriesParams};
pub use dejonq::{CountResult, EvalPath};
pub use exact::Partition;
pub use lls::{RamificationSequence, VanishingSequence};
