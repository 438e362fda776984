//! Validated Hermitian matrices, the Loewner order, and definiteness tests.

use crate::error::{Error, Result};
use crate::linalg::eigen::eigvalsh;
use crate::linalg::matrix::Matrix;
use crate::scalar::{Scalar, ScalarField};
use crate::tol;

/// Square matrix equal to its conjugate transpose, exactly.
///
/// Construction goes through [`validate_hermitian`] (tolerance-checked ingest
/// of possibly noisy data) or [`HermitianMatrix::symmetrize`] (projection of a
/// matrix that is Hermitian in exact arithmetic but carries rounding noise).
/// Either way the stored entries satisfy `m[i][j] == conj(m[j][i])` exactly,
/// so downstream invariants are testable without slack.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix<T: Scalar> {
    matrix: Matrix<T>,
}

impl<T: Scalar> HermitianMatrix<T> {
    /// Project a square matrix onto the Hermitian subspace, `(M + M*)/2`.
    pub fn symmetrize(matrix: Matrix<T>) -> Self {
        HermitianMatrix {
            matrix: matrix.hermitian_part(),
        }
    }

    /// Hermitian matrix with the given real diagonal.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        HermitianMatrix {
            matrix: Matrix::from_real_diagonal(diag),
        }
    }

    pub fn identity(dim: usize) -> Self {
        HermitianMatrix {
            matrix: Matrix::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn field(&self) -> ScalarField {
        T::FIELD
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.matrix.norm()
    }

    /// Multiply by a real coefficient; positive factors preserve
    /// definiteness.
    pub fn scaled(&self, factor: f64) -> HermitianMatrix<T> {
        HermitianMatrix {
            matrix: self.matrix.scale(factor),
        }
    }

    /// Congruence `X * self * X^*`. The result is Hermitian in exact
    /// arithmetic; rounding noise is projected away.
    pub fn congruence(&self, x: &Matrix<T>) -> HermitianMatrix<T> {
        Self::symmetrize(&(x * &self.matrix) * &x.adjoint())
    }

    /// Inverse via Cholesky, `H^{-1} = R^{-1} R^{-*}`.
    pub fn inverse(&self) -> Result<HermitianMatrix<T>> {
        let r = crate::linalg::cholesky::cholesky(self, tol::PIVOT)?;
        let rinv = r.inverse();
        Ok(Self::symmetrize(&rinv * &rinv.adjoint()))
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        eigvalsh(self)
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for HermitianMatrix<T> {
    type Output = T;

    fn index(&self, idx: (usize, usize)) -> &T {
        &self.matrix[idx]
    }
}

/// Check that `raw` is square and Hermitian within `tol`, and return the
/// symmetrized matrix `(raw + raw*)/2`.
///
/// The asymmetry bound is `tol * max(1, max_abs(raw))`. Non-finite entries
/// never pass.
pub fn validate_hermitian<T: Scalar>(raw: &Matrix<T>, tol: f64) -> Result<HermitianMatrix<T>> {
    if !raw.is_square() {
        return Err(Error::NotSquare {
            rows: raw.rows(),
            cols: raw.cols(),
        });
    }
    if raw.rows() == 0 {
        return Err(Error::EmptyMatrix);
    }
    let threshold = tol * f64::max(1.0, raw.max_abs());
    let asymmetry = raw.asymmetry();
    // NaN asymmetry must fail too, hence the negated comparison.
    if !(asymmetry <= threshold) || !raw.all_finite() {
        return Err(Error::AsymmetryExceedsTolerance {
            asymmetry,
            threshold,
        });
    }
    Ok(HermitianMatrix::symmetrize(raw.clone()))
}

/// Definiteness classes of a Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    /// Positive semidefinite with at least one (numerically) zero eigenvalue.
    PositiveSemidefiniteSingular,
    NotPsd,
}

/// Classify by the smallest eigenvalue against `±tol * max(1, ||H||)`.
pub fn classify_definiteness<T: Scalar>(h: &HermitianMatrix<T>, tol: f64) -> Result<Definiteness> {
    let eigs = eigvalsh(h)?;
    let scale = f64::max(1.0, h.norm());
    let min = eigs.first().copied().unwrap_or(1.0);
    if min > tol * scale {
        Ok(Definiteness::PositiveDefinite)
    } else if min >= -tol * scale {
        Ok(Definiteness::PositiveSemidefiniteSingular)
    } else {
        Ok(Definiteness::NotPsd)
    }
}

/// Loewner order test: `A ⪯ B` iff `λ_min(B - A) ≥ -tol * max(1, ||A||, ||B||)`.
pub fn loewner_leq<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    tol: f64,
) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let diff = HermitianMatrix::symmetrize(b.matrix() - a.matrix());
    let eigs = eigvalsh(&diff)?;
    let scale = f64::max(1.0, f64::max(a.norm(), b.norm()));
    Ok(eigs.first().map_or(true, |&min| min >= -tol * scale))
}
