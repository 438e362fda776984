//! Definite pencils `(A, B)` with `A` positive definite: generalized
//! eigenvalues and the congruence that diagonalizes both matrices at once.
//!
//! The eigenvalues of `A^{-1}B` are computed from the Hermitian reduction
//! `R^{-*} B R^{-1}` with `A = R* R`, never from the non-Hermitian product
//! `A^{-1}B` itself.

use crate::error::{Error, Result};
use crate::linalg::cholesky::cholesky;
use crate::linalg::eigen::{eigh, eigvalsh};
use crate::linalg::hermitian::HermitianMatrix;
use crate::linalg::matrix::Matrix;
use crate::scalar::Scalar;
use crate::tol;

/// Constructive simultaneous diagonalization: `transform A transform* = I`
/// and `transform B transform* = diag(eigenvalues)`, with the inverse
/// transform kept alongside so congruences can be undone without a general
/// matrix inversion.
#[derive(Debug, Clone)]
pub struct PencilReduction<T: Scalar> {
    /// `X` with `X A X* = I`, `X B X* = diag(λ)`.
    pub transform: Matrix<T>,
    /// `X^{-1} = R* V`.
    pub inverse: Matrix<T>,
    /// Ascending eigenvalues of `A^{-1} B`.
    pub eigenvalues: Vec<f64>,
}

/// Build the reduction from `A = R* R` and the spectrum of `R^{-*} B R^{-1}`:
/// `X = V* R^{-*}`.
pub fn pencil_reduction<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    tol: f64,
) -> Result<PencilReduction<T>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let r = cholesky(a, tol)?;
    let reduced = r.reduce(b);
    let spectrum = eigh(&reduced)?;
    let v = spectrum.vectors();
    // X = V* R^{-*} = (R^{-1} V)*
    let transform = r.solve_left(v).adjoint();
    let inverse = &r.matrix().adjoint() * v;
    Ok(PencilReduction {
        transform,
        inverse,
        eigenvalues: spectrum.eigenvalues().to_vec(),
    })
}

/// Ascending eigenvalues of `A^{-1}B` for positive definite `A` and Hermitian
/// `B`, via the one-sided Cholesky reduction.
pub fn gen_eigvals<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    tol: f64,
) -> Result<Vec<f64>> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let r = cholesky(a, tol)?;
    eigvalsh(&r.reduce(b))
}

/// Nonsingular `X` and real diagonal `D` with `X A X* = I` and `X B X* = D`,
/// `D` holding the ascending eigenvalues of `A^{-1}B`.
pub fn simultaneous_diagonalizer<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Result<(Matrix<T>, Vec<f64>)> {
    let red = pencil_reduction(a, b, tol::PIVOT)?;
    Ok((red.transform, red.eigenvalues))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian::validate_hermitian;

    fn herm(rows: Vec<Vec<f64>>) -> HermitianMatrix<f64> {
        validate_hermitian(&Matrix::from_rows(rows), tol::SYMMETRY).unwrap()
    }

    fn diag(d: &[f64]) -> HermitianMatrix<f64> {
        HermitianMatrix::from_real_diagonal(d)
    }

    #[test]
    fn diagonal_pencil_is_entrywise_ratio() {
        let eigs = gen_eigvals(&diag(&[1.0, 4.0]), &diag(&[2.0, 2.0]), tol::PIVOT).unwrap();
        assert!((eigs[0] - 0.5).abs() < 1e-14);
        assert!((eigs[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn equal_matrices_give_unit_eigenvalues() {
        let a = herm(vec![vec![3.0, 1.0], vec![1.0, 2.0]]);
        let eigs = gen_eigvals(&a, &a, tol::PIVOT).unwrap();
        for l in eigs {
            assert!((l - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn pencil_characteristic_polynomial() {
        // det(B - λA) = 2λ² - 5λ + 1 → roots (5 ∓ √17)/4
        let a = diag(&[2.0, 1.0]);
        let b = herm(vec![vec![1.0, 1.0], vec![1.0, 2.0]]);
        let eigs = gen_eigvals(&a, &b, tol::PIVOT).unwrap();
        let lo = (5.0 - 17f64.sqrt()) / 4.0;
        let hi = (5.0 + 17f64.sqrt()) / 4.0;
        assert!((eigs[0] - lo).abs() < 1e-14);
        assert!((eigs[1] - hi).abs() < 1e-14);
    }

    #[test]
    fn diagonalizer_on_diagonal_pair() {
        let a = diag(&[1.0, 4.0]);
        let b = diag(&[2.0, 12.0]);
        let (x, d) = simultaneous_diagonalizer(&a, &b).unwrap();
        assert!((d[0] - 2.0).abs() < 1e-14);
        assert!((d[1] - 3.0).abs() < 1e-14);
        let xa = &(&x * a.matrix()) * &x.adjoint();
        assert!((&xa - &Matrix::identity(2)).norm() < 1e-13);
        let xb = &(&x * b.matrix()) * &x.adjoint();
        assert!((&xb - &Matrix::from_real_diagonal(&d)).norm() < 1e-13);
    }

    #[test]
    fn diagonalizer_sorts_an_identity_pencil() {
        let a = HermitianMatrix::<f64>::identity(3);
        let b = diag(&[5.0, -1.0, 2.0]);
        let (x, d) = simultaneous_diagonalizer(&a, &b).unwrap();
        assert_eq!(d, vec![-1.0, 2.0, 5.0]);
        let xb = &(&x * b.matrix()) * &x.adjoint();
        assert!((&xb - &Matrix::from_real_diagonal(&d)).norm() < 1e-13);
    }

    #[test]
    fn residuals_on_general_pair() {
        let a = diag(&[2.0, 1.0]);
        let b = herm(vec![vec![1.0, 1.0], vec![1.0, 2.0]]);
        let (x, d) = simultaneous_diagonalizer(&a, &b).unwrap();
        let scale = f64::max(a.norm(), b.norm());
        let xa = &(&x * a.matrix()) * &x.adjoint();
        let xb = &(&x * b.matrix()) * &x.adjoint();
        assert!((&xa - &Matrix::identity(2)).norm() <= 1e-10 * scale);
        assert!((&xb - &Matrix::from_real_diagonal(&d)).norm() <= 1e-10 * scale);
        assert_eq!(d, gen_eigvals(&a, &b, tol::PIVOT).unwrap());
    }

    #[test]
    fn reduction_inverse_is_consistent() {
        let a = herm(vec![vec![4.0, 2.0], vec![2.0, 5.0]]);
        let b = herm(vec![vec![1.0, 0.5], vec![0.5, 3.0]]);
        let red = pencil_reduction(&a, &b, tol::PIVOT).unwrap();
        let prod = &red.transform * &red.inverse;
        assert!((&prod - &Matrix::identity(2)).norm() < 1e-12);
    }

    #[test]
    fn indefinite_first_argument_fails() {
        let a = herm(vec![vec![1.0, 2.0], vec![2.0, 1.0]]);
        let b = HermitianMatrix::<f64>::identity(2);
        assert!(matches!(
            gen_eigvals(&a, &b, tol::PIVOT),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }
}
