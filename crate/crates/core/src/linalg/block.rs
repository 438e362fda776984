//! 2x2 block views of a Hermitian matrix and the Schur complement of the
//! leading block.

use crate::error::{Error, Result};
use crate::linalg::cholesky::cholesky;
use crate::linalg::hermitian::HermitianMatrix;
use crate::linalg::matrix::Matrix;
use crate::scalar::Scalar;

/// Split of a Hermitian matrix at index `m` into
/// `[[B11, B12], [B12*, B22]]`. A full-width split (`m = dim`) leaves the
/// trailing blocks empty.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockPartition<T: Scalar> {
    pub split: usize,
    pub b11: HermitianMatrix<T>,
    pub b12: Matrix<T>,
    pub b22: HermitianMatrix<T>,
}

impl<T: Scalar> BlockPartition<T> {
    /// Put the blocks back together.
    pub fn reassemble(&self) -> HermitianMatrix<T> {
        HermitianMatrix::symmetrize(Matrix::from_blocks(
            self.b11.matrix(),
            &self.b12,
            &self.b12.adjoint(),
            self.b22.matrix(),
        ))
    }
}

/// Extract the split at `m`, `1 <= m <= dim`.
pub fn partition<T: Scalar>(b: &HermitianMatrix<T>, m: usize) -> Result<BlockPartition<T>> {
    let n = b.dim();
    if m < 1 || m > n {
        return Err(Error::SplitOutOfRange { split: m, dim: n });
    }
    let full = b.matrix();
    Ok(BlockPartition {
        split: m,
        b11: HermitianMatrix::symmetrize(full.block(0, 0, m, m)),
        b12: full.block(0, m, m, n - m),
        b22: HermitianMatrix::symmetrize(full.block(m, m, n - m, n - m)),
    })
}

/// Leading principal `m x m` submatrix.
pub fn leading_block<T: Scalar>(b: &HermitianMatrix<T>, m: usize) -> Result<HermitianMatrix<T>> {
    partition(b, m).map(|p| p.b11)
}

/// `B22 - B12* B11^{-1} B12`, computed as `B22 - W* W` with
/// `W = R^{-*} B12` and `B11 = R* R`.
pub fn schur_complement<T: Scalar>(p: &BlockPartition<T>, tol: f64) -> Result<HermitianMatrix<T>> {
    let r = cholesky(&p.b11, tol)?;
    let w = r.solve_adjoint_left(&p.b12);
    let correction = &w.adjoint() * &w;
    Ok(HermitianMatrix::symmetrize(
        p.b22.matrix() - &correction,
    ))
}

/// Unitriangular congruence `L = [[I, 0], [-B12* B11^{-1}, I]]` that clears
/// the off-diagonal block: `L B L* = blockdiag(B11, schur_complement)`.
pub fn elimination_matrix<T: Scalar>(p: &BlockPartition<T>, tol: f64) -> Result<Matrix<T>> {
    let r = cholesky(&p.b11, tol)?;
    // K = B12* B11^{-1} = (R^{-1} R^{-*} B12)*
    let k = r.solve_left(&r.solve_adjoint_left(&p.b12)).adjoint();
    let m = p.b11.dim();
    let tail = p.b22.dim();
    Ok(Matrix::from_blocks(
        &Matrix::identity(m),
        &Matrix::zeros(m, tail),
        &(-&k),
        &Matrix::identity(tail),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::hermitian::{classify_definiteness, validate_hermitian, Definiteness};
    use crate::tol;

    fn herm(rows: Vec<Vec<f64>>) -> HermitianMatrix<f64> {
        validate_hermitian(&Matrix::from_rows(rows), tol::SYMMETRY).unwrap()
    }

    #[test]
    fn diagonal_split() {
        let b = HermitianMatrix::<f64>::from_real_diagonal(&[1.0, 2.0, 3.0]);
        let p = partition(&b, 2).unwrap();
        assert_eq!(p.b11, HermitianMatrix::from_real_diagonal(&[1.0, 2.0]));
        assert_eq!(p.b12.norm(), 0.0);
        assert_eq!(p.b22, HermitianMatrix::from_real_diagonal(&[3.0]));
        assert_eq!(p.reassemble(), b);
    }

    #[test]
    fn direct_read_off() {
        let b = herm(vec![vec![2.0, 1.0], vec![1.0, 1.0]]);
        let p = partition(&b, 1).unwrap();
        assert_eq!(p.b11[(0, 0)], 2.0);
        assert_eq!(p.b12[(0, 0)], 1.0);
        assert_eq!(p.b22[(0, 0)], 1.0);
    }

    #[test]
    fn degenerate_split_keeps_whole_matrix() {
        let b = herm(vec![vec![2.0, 1.0], vec![1.0, 1.0]]);
        let p = partition(&b, 2).unwrap();
        assert_eq!(p.b11, b);
        assert!(p.b12.is_empty());
        assert_eq!(p.b22.dim(), 0);
        assert_eq!(p.reassemble(), b);
    }

    #[test]
    fn split_out_of_range() {
        let b = HermitianMatrix::<f64>::identity(2);
        assert!(matches!(partition(&b, 0), Err(Error::SplitOutOfRange { .. })));
        assert!(matches!(partition(&b, 3), Err(Error::SplitOutOfRange { .. })));
    }

    #[test]
    fn schur_worked_example() {
        let b = herm(vec![vec![2.0, 1.0], vec![1.0, 1.0]]);
        let p = partition(&b, 1).unwrap();
        let s = schur_complement(&p, tol::PIVOT).unwrap();
        assert!((s[(0, 0)] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn schur_of_block_diagonal_is_trailing_block() {
        let b = HermitianMatrix::<f64>::from_real_diagonal(&[3.0, 7.0]);
        let p = partition(&b, 1).unwrap();
        let s = schur_complement(&p, tol::PIVOT).unwrap();
        assert_eq!(s[(0, 0)], 7.0);
    }

    #[test]
    fn schur_of_identity_is_identity() {
        for m in 1..=4 {
            let b = HermitianMatrix::<f64>::identity(4);
            let p = partition(&b, m).unwrap();
            let s = schur_complement(&p, tol::PIVOT).unwrap();
            assert_eq!(s, HermitianMatrix::identity(4 - m));
        }
    }

    #[test]
    fn schur_of_pd_is_pd() {
        let b = herm(vec![
            vec![4.0, 1.0, 0.5],
            vec![1.0, 3.0, -0.25],
            vec![0.5, -0.25, 2.0],
        ]);
        for m in 1..3 {
            let p = partition(&b, m).unwrap();
            let s = schur_complement(&p, tol::PIVOT).unwrap();
            assert_eq!(
                classify_definiteness(&s, tol::ORDER).unwrap(),
                Definiteness::PositiveDefinite
            );
        }
    }

    #[test]
    fn schur_singular_leading_block_fails() {
        let b = herm(vec![vec![0.0, 0.0], vec![0.0, 1.0]]);
        let p = partition(&b, 1).unwrap();
        assert!(matches!(
            schur_complement(&p, tol::PIVOT),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }
}
