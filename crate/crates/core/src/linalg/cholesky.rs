//! Cholesky factorization `H = R* R` with an upper-triangular factor.
//!
//! Success doubles as the positive-definiteness certificate used throughout
//! the crate.

use crate::error::{Error, Result};
use crate::linalg::hermitian::HermitianMatrix;
use crate::linalg::matrix::Matrix;
use crate::scalar::Scalar;

/// Upper-triangular matrix with real positive diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct UpperTriangular<T: Scalar> {
    matrix: Matrix<T>,
}

impl<T: Scalar> UpperTriangular<T> {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    /// `R^{-*} B`, by forward substitution on each column (`R*` is lower
    /// triangular with real positive diagonal).
    pub fn solve_adjoint_left(&self, b: &Matrix<T>) -> Matrix<T> {
        let n = self.dim();
        assert_eq!(b.rows(), n);
        let r = &self.matrix;
        let mut x = Matrix::zeros(n, b.cols());
        for j in 0..b.cols() {
            for i in 0..n {
                let mut s = b[(i, j)];
                for k in 0..i {
                    // (R*)[i][k] = conj(R[k][i])
                    s = s - r[(k, i)].conj() * x[(k, j)];
                }
                x[(i, j)] = s.scale(1.0 / r[(i, i)].re());
            }
        }
        x
    }

    /// `R^{-1} B`, by back substitution on each column.
    pub fn solve_left(&self, b: &Matrix<T>) -> Matrix<T> {
        let n = self.dim();
        assert_eq!(b.rows(), n);
        let r = &self.matrix;
        let mut x = Matrix::zeros(n, b.cols());
        for j in 0..b.cols() {
            for i in (0..n).rev() {
                let mut s = b[(i, j)];
                for k in (i + 1)..n {
                    s = s - r[(i, k)] * x[(k, j)];
                }
                x[(i, j)] = s.scale(1.0 / r[(i, i)].re());
            }
        }
        x
    }

    /// `B R^{-1}`, by forward substitution over columns of the product.
    pub fn solve_right(&self, b: &Matrix<T>) -> Matrix<T> {
        let n = self.dim();
        assert_eq!(b.cols(), n);
        let r = &self.matrix;
        let mut x = Matrix::zeros(b.rows(), n);
        for j in 0..n {
            for i in 0..b.rows() {
                let mut s = b[(i, j)];
                for k in 0..j {
                    s = s - x[(i, k)] * r[(k, j)];
                }
                x[(i, j)] = s.scale(1.0 / r[(j, j)].re());
            }
        }
        x
    }

    /// Congruence reduction `R^{-*} B R^{-1}`, symmetrized. For `B = H` with
    /// `H = R* R` this is the identity; it realizes `A^{-1}`-weighted
    /// spectra without ever forming an inverse.
    pub fn reduce(&self, b: &HermitianMatrix<T>) -> HermitianMatrix<T> {
        HermitianMatrix::symmetrize(self.solve_right(&self.solve_adjoint_left(b.matrix())))
    }

    /// Dense inverse `R^{-1}` (upper triangular).
    pub fn inverse(&self) -> Matrix<T> {
        self.solve_right(&Matrix::identity(self.dim()))
    }
}

/// Factor a Hermitian matrix as `R* R`.
///
/// Fails with [`Error::NotPositiveDefinite`] at the first pivot that is not
/// greater than `tol * max(0, max_diagonal)`, which is exactly the
/// positive-definiteness test used by every routine that requires membership
/// in the open cone.
pub fn cholesky<T: Scalar>(h: &HermitianMatrix<T>, tol: f64) -> Result<UpperTriangular<T>> {
    let n = h.dim();
    let max_diag = (0..n).map(|i| h[(i, i)].re()).fold(0.0, f64::max);
    let threshold = tol * f64::max(max_diag, 0.0);
    let mut r: Matrix<T> = Matrix::zeros(n, n);
    for i in 0..n {
        let mut pivot = h[(i, i)].re();
        for k in 0..i {
            pivot -= r[(k, i)].abs_sq();
        }
        if !(pivot > threshold) {
            return Err(Error::NotPositiveDefinite { pivot: i });
        }
        let d = pivot.sqrt();
        r[(i, i)] = T::from_re(d);
        for j in (i + 1)..n {
            let mut s = h[(i, j)];
            for k in 0..i {
                s = s - r[(k, i)].conj() * r[(k, j)];
            }
            r[(i, j)] = s.scale(1.0 / d);
        }
    }
    Ok(UpperTriangular { matrix: r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian::validate_hermitian;
    use crate::scalar::Complex64;
    use crate::tol;

    fn herm(rows: Vec<Vec<f64>>) -> HermitianMatrix<f64> {
        validate_hermitian(&Matrix::from_rows(rows), tol::SYMMETRY).unwrap()
    }

    #[test]
    fn worked_two_by_two() {
        let h = herm(vec![vec![4.0, 2.0], vec![2.0, 5.0]]);
        let r = cholesky(&h, tol::PIVOT).unwrap();
        assert!((r.matrix()[(0, 0)] - 2.0).abs() < 1e-15);
        assert!((r.matrix()[(0, 1)] - 1.0).abs() < 1e-15);
        assert!((r.matrix()[(1, 0)]).abs() == 0.0);
        assert!((r.matrix()[(1, 1)] - 2.0).abs() < 1e-15);
        let rt_r = &r.matrix().adjoint() * r.matrix();
        assert!((&rt_r - h.matrix()).norm() <= 1e-12 * h.norm());
    }

    #[test]
    fn identity_factors_to_identity() {
        let h = HermitianMatrix::<f64>::identity(3);
        let r = cholesky(&h, tol::PIVOT).unwrap();
        assert_eq!(r.matrix(), &Matrix::identity(3));
    }

    #[test]
    fn indefinite_fails_with_pivot_index() {
        // eigenvalues {3, -1}
        let h = herm(vec![vec![1.0, 2.0], vec![2.0, 1.0]]);
        assert_eq!(
            cholesky(&h, tol::PIVOT),
            Err(Error::NotPositiveDefinite { pivot: 1 })
        );
    }

    #[test]
    fn empty_matrix_factors() {
        let h = HermitianMatrix::<f64>::from_real_diagonal(&[]);
        let r = cholesky(&h, tol::PIVOT).unwrap();
        assert_eq!(r.dim(), 0);
    }

    #[test]
    fn complex_roundtrip() {
        let m = Matrix::from_rows(vec![
            vec![Complex64::new(3.0, 0.0), Complex64::new(1.0, 1.0)],
            vec![Complex64::new(1.0, -1.0), Complex64::new(4.0, 0.0)],
        ]);
        let h = validate_hermitian(&m, tol::SYMMETRY).unwrap();
        let r = cholesky(&h, tol::PIVOT).unwrap();
        let rt_r = &r.matrix().adjoint() * r.matrix();
        assert!((&rt_r - h.matrix()).norm() <= 1e-14 * h.norm());
    }

    #[test]
    fn triangular_solves_invert() {
        let h = herm(vec![
            vec![4.0, 2.0, 0.5],
            vec![2.0, 5.0, 1.0],
            vec![0.5, 1.0, 3.0],
        ]);
        let r = cholesky(&h, tol::PIVOT).unwrap();
        let rinv = r.inverse();
        let eye = &rinv * r.matrix();
        assert!((&eye - &Matrix::identity(3)).norm() < 1e-13);
        // R^{-*} H R^{-1} = I
        let reduced = r.reduce(&h);
        assert!((reduced.matrix() - &Matrix::identity(3)).norm() < 1e-13);
    }
}
