//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by validation, factorization, and distance routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input matrix has differing row and column counts.
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    /// Input matrix has zero dimension.
    #[error("matrix must have dimension >= 1")]
    EmptyMatrix,

    /// Input deviates from its (conjugate) transpose by more than the tolerance.
    #[error("asymmetry {asymmetry:.3e} exceeds tolerance {threshold:.3e}")]
    AsymmetryExceedsTolerance { asymmetry: f64, threshold: f64 },

    /// A Cholesky pivot failed; the matrix is not positive definite.
    #[error("matrix is not positive definite (pivot {pivot})")]
    NotPositiveDefinite { pivot: usize },

    /// The Jacobi eigensolver did not reach its convergence threshold.
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },

    /// Two matrices that must share a dimension do not.
    #[error("dimension mismatch ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },

    /// Block split index outside `1..=dim`.
    #[error("split index {split} out of range for dimension {dim}")]
    SplitOutOfRange { split: usize, dim: usize },

    /// The first argument of a cross-dimensional distance is larger than the second.
    #[error("first argument dimension {first} exceeds second argument dimension {second}")]
    FirstArgumentLarger { first: usize, second: usize },

    /// A matrix required to be positive semidefinite is indefinite.
    #[error("matrix is not positive semidefinite")]
    NotPsd,

    /// Inner ellipsoid dimension exceeds the outer one.
    #[error("inner ellipsoid dimension {inner} exceeds outer dimension {outer}")]
    InnerDimensionLarger { inner: usize, outer: usize },

    /// A congruence transform failed the conditioning certificate.
    #[error("transform is numerically singular (sigma_min/sigma_max = {ratio:.3e})")]
    SingularTransform { ratio: f64 },

    /// Rejection sampling exhausted its retry budget.
    #[error("sampling failed after {retries} retries")]
    SamplingFailure { retries: usize },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
