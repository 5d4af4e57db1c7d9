//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by state constructors, evolution routines, fitters and IO.
#[derive(Debug, Error)]
pub enum Error {
    /// A state or operator does not fit in the truncated space.
    #[error("truncation failure: tail mass {tail_mass:.3e} at dim {dim} (limit {limit:.1e})")]
    Truncation { tail_mass: f64, dim: usize, limit: f64 },

    /// Mismatched vector/matrix dimensions.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An operation requiring a Hermitian matrix received a non-Hermitian one.
    #[error("non-Hermitian input: max |H - H†| = {defect:.3e}")]
    NonHermitian { defect: f64 },

    /// Requested projection onto a branch with (numerically) zero weight.
    #[error("zero-probability herald branch: p = {probability:.3e}")]
    ZeroProbabilityBranch { probability: f64 },

    /// Operation requires a displaced or displaced-squeezed basis.
    #[error("basis mismatch: {context}")]
    BasisMismatch { context: String },

    /// Dense density-matrix evolution requested above the supported size.
    #[error("dimension overflow: dense master equation supports n_max <= {max}, got {got}")]
    DimensionOverflow { max: usize, got: usize },

    /// Invalid parameter value at an API boundary.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An iterative routine failed to converge.
    #[error("non-convergence: {0}")]
    NonConvergence(String),

    /// Malformed structured-text input.
    #[error("parse error: {0}")]
    Parse(String),

    /// Filesystem failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
