//! Cyclic subgroups of SL(2, ℤ) that are Zariski dense in a split maximal
//! torus, built from norm-one units of real quadratic fields.
//!
//! Density is certified through the span of the Galois orbit of the log
//! vector of the unit. The span condition establishes density in the
//! norm-one torus; that is the statement the certificate carries. For
//! `d > 2` the module checks user-supplied log vectors and permutation
//! generators instead of constructing units.

mod orbit;
mod pell;

pub use orbit::{galois_invariance_check, orbit_span_check};
pub use pell::{log_embedding, pell_fundamental, regular_rep, zariski_dense_cyclic, Density, TorusCertificate, UnitSpec};

use thiserror::Error;

use crate::exact::ExactError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum UnitTorusError {
    #[error("m = {0} is a perfect square")]
    PerfectSquare(u64),
    #[error("m = {0} is not a squarefree integer >= 2")]
    NotSquarefree(u64),
    #[error("({x}, {y}) does not satisfy x^2 - {m} y^2 = 1 with x, y > 0")]
    NotPell { m: u64, x: String, y: String },
    #[error("no permutation generators for dimension {0}")]
    NoGenerators(usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("log vector sums to {0}, not 0")]
    NotSumZero(f64),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
