//! Floating-point spectral diagnostics: Cartan and Jordan projections,
//! finite-ball Anosov gap fits, ping-pong certificates on the projective line,
//! exterior and symmetric powers, translation lengths through linear
//! representations, and quaternionic matrices with their complex embedding.
//!
//! Every tolerance is explicit; [`DEFAULT_TOL`] is the usual choice.

mod anosov;
mod pingpong;
mod powers;
mod projection;
mod quat;
mod tlen;

pub use anosov::{anosov_gap_fit, GapFit, GapRow};
pub use pingpong::{ping_pong_certify, Arc, PingPong};
pub use powers::{exterior_power, gt_matrix, multisets, subsets, symmetric_power, to_complex};
pub use projection::{cartan_projection, jordan_crosscheck, jordan_projection, SpectralData};
pub use quat::{obstruction_witness, quat_complex_embed, translation_length_quat, Obstruction, ObstructionReport, QuatMatrix};
pub use tlen::{power_length_check, translation_length_via_rep, PowerLengthReport, PowerRep, TranslationLength};

use nalgebra::{Complex, DMatrix};
use thiserror::Error;

pub type RealMatrix = DMatrix<f64>;
pub type ComplexMatrix = DMatrix<Complex<f64>>;

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("power {p} is out of range for dimension {dim}")]
    PowerOutOfRange { p: usize, dim: usize },
    #[error("J-form residual {residual:e} exceeds tolerance {tol:e}")]
    JResidual { residual: f64, tol: f64 },
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("generator {index} has dimension {found}, expected {expected}")]
    DimensionMismatch { index: usize, found: usize, expected: usize },
    #[error("root index {root} must lie in 1..={max}")]
    RootOutOfRange { root: usize, max: usize },
    #[error("radius {0} is below the minimum of 2")]
    RadiusTooSmall(usize),
    #[error("invalid quaternion matrix: {0}")]
    InvalidQuat(String),
}

pub(crate) fn check_square<T: nalgebra::Scalar>(g: &DMatrix<T>) -> Result<usize, SpectraError> {
    if g.nrows() != g.ncols() || g.nrows() == 0 {
        return Err(SpectraError::NotSquare { rows: g.nrows(), cols: g.ncols() });
    }
    Ok(g.nrows())
}

/// Sorted in non-increasing order.
pub(crate) fn sort_desc(v: &mut [f64]) {
    v.sort_by(|a, b| b.total_cmp(a));
}
