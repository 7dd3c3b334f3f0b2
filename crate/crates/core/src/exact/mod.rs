//! Exact arithmetic: scalars in ℚ or ℚ(√m), Laurent polynomials in a formal
//! variable `q` with rational exponents, and dense square matrices over both.
//!
//! Every certificate produced by [`crate::linearize`] and every membership
//! decision made by [`crate::words`] is computed here, without floating point.

mod matrix;
mod qpoly;
mod ring;
mod scalar;
mod text;

pub use matrix::{Matrix, QMatrix, ScalarMatrix};
pub use qpoly::{Exponent, QPoly};
pub use ring::Ring;
pub use scalar::{is_squarefree, scalar_arith, ArithOp, ExactScalar};
pub use text::{parse_exponent, ParseExactError};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible radicands: sqrt({left}) and sqrt({right}) live in different fields")]
    IncompatibleRadicands { left: u64, right: u64 },
    #[error("radicand {0} is not a squarefree integer >= 2")]
    BadRadicand(u64),
    #[error("dimension mismatch: {left}x{left} against {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("matrix is singular")]
    Singular,
    #[error(transparent)]
    Parse(#[from] ParseExactError),
}

/// `true` iff every off-diagonal entry is the zero polynomial and all diagonal
/// entries coincide.
pub fn is_scalar_multiple_of_identity<T: Ring>(a: &Matrix<T>) -> bool {
    a.is_scalar_multiple_of_identity()
}

/// Exact product of two Laurent polynomials.
pub fn qpoly_mul(p: &QPoly, r: &QPoly) -> QPoly {
    p.times(r)
}

/// Exact matrix product, rejecting mismatched dimensions.
pub fn qmatrix_mul(a: &QMatrix, b: &QMatrix) -> Result<QMatrix, ExactError> {
    a.try_mul(b)
}
