//! Geometric distance on the positive definite cone, including between
//! matrices of different dimensions.
//!
//! The cone of real symmetric or complex Hermitian positive definite matrices
//! carries the affine-invariant Riemannian distance
//! `δ₂(A, B) = [Σ log² λ_j(A^{-1}B)]^{1/2}`. This crate computes it, extends
//! it to a pair of matrices of different dimensions `m <= n` via two
//! point-to-set distances that share a closed-form common value `δ₂⁺`, and
//! constructs the explicit optima attaining them. Because positive definite
//! matrices parameterize origin-centered ellipsoids and covariance matrices,
//! this measures separation between such objects across dimensions.
//!
//! Modules:
//! - [`linalg`]: validated Hermitian matrices and the dense kernels
//!   (Cholesky, Jacobi eigendecomposition, definite pencils, block
//!   partitions, Loewner order).
//! - [`geometry`]: the distances, the decomposition of the equal-dimension
//!   distance into its two ordered halves, witnesses, and the positive
//!   semidefinite boundary extension.
//! - [`ellipsoid`]: the ellipsoid view and containment predicates.
//! - [`oracle`]: seeded sampling of the constraint sets and brute-force
//!   certification of the closed forms, plus structural checkers.
//!
//! Everything operates on immutable values and is deterministic given the
//! inputs (and, for the oracle, the seed).

pub mod ellipsoid;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod oracle;
pub mod scalar;
pub mod tol;

pub use error::{Error, Result};
pub use geometry::{
    delta2, delta2_plus, delta2_plus_extended, dist_to_contained_set, dist_to_containing_set,
    pythagorean_split, DistanceResult, ExtendedDistance, ExtendedReal, PythagoreanSplit, Witness,
};
pub use linalg::{validate_hermitian, HermitianMatrix, Matrix};
pub use oracle::{verify_infimum, verify_infimum_against, SeededRng, VerificationReport};
pub use scalar::{Complex64, Scalar, ScalarField};
