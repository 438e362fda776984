//! Default tolerances.
//!
//! All thresholds below are scaled inside the operations that use them by
//! `max(1, norm)` of the operands, so they behave as relative tolerances for
//! large matrices and absolute ones near the origin. They are calibrated for
//! double precision at dimensions up to about 100.

/// Accepted relative asymmetry when ingesting a Hermitian matrix.
pub const SYMMETRY: f64 = 1e-12;

/// Cholesky pivot threshold relative to the largest diagonal entry.
pub const PIVOT: f64 = 1e-12;

/// Loewner-order and definiteness classification threshold.
pub const ORDER: f64 = 1e-10;

/// Residual allowance for factorizations (`R*R = H`, congruence residuals).
pub const FACTOR: f64 = 1e-10;

/// An eigenvalue of the pencil counts toward the distance only when its
/// logarithm exceeds this margin; ties at 1 contribute nothing.
pub const TIE: f64 = 1e-12;

/// Agreement tolerance between the closed-form value and the value attained
/// by a constructed optimum.
pub const WITNESS: f64 = 1e-9;

/// Jacobi sweep convergence: off-diagonal Frobenius mass relative to the
/// input norm.
pub const JACOBI_CONVERGENCE: f64 = 1e-14;

/// Maximum number of Jacobi sweeps before reporting failure.
pub const JACOBI_MAX_SWEEPS: usize = 30;

/// Conditioning certificate for congruence transforms:
/// `sigma_min >= SINGULARITY * sigma_max`.
pub const SINGULARITY: f64 = 1e-10;
