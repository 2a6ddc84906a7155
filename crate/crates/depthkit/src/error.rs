//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by scale, depth, and experiment computations.
#[derive(Debug, Error)]
pub enum DepthError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty sample")]
    EmptySample,

    #[error("matrix is not symmetric positive definite: {0}")]
    NotSpd(String),

    #[error("degenerate covariance: {0}; fall back to the L2 metric or supply a ridged shape matrix")]
    DegenerateCovariance(String),

    #[error("degenerate boundary: the density vanishes at both boundary points")]
    DegenerateBoundary,

    #[error("all candidate projection directions are degenerate (zero MAD)")]
    DegenerateDirections,

    #[error("rank correlation undefined for constant input")]
    ConstantInput,

    #[error("regions come from different samples ({0} vs {1} observations)")]
    MismatchedRegions(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite value in input: {0}")]
    NonFiniteInput(String),

    #[error("failed to read data: {0}")]
    Io(#[from] std::io::Error),

    #[error("failed to parse CSV: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, DepthError>;
