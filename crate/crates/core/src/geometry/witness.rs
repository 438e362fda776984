//! Closed-form optima for the two point-to-set distance problems.
//!
//! Both problems reduce by congruence to a diagonal pencil, where the optimum
//! is a diagonal matrix read off eigenvalue by eigenvalue; the optimum is
//! then mapped back to the original coordinates. The returned [`Witness`]
//! carries the optimum in original coordinates together with the reduction
//! transforms, so the construction can be re-verified from outside.

use crate::error::{Error, Result};
use crate::geometry::{delta2, distance_from_pencil, DistanceResult};
use crate::linalg::{
    cholesky, elimination_matrix, partition, pencil_reduction, schur_complement, HermitianMatrix,
    Matrix,
};
use crate::scalar::Scalar;
use crate::tol;

/// Congruence transforms used to reduce a point-to-set problem to diagonal
/// form.
#[derive(Debug, Clone)]
pub enum Reduction<T: Scalar> {
    /// One transform `X` with `X A X* = I` and `X B11 X* = diag(λ)`; the
    /// optimum lives in the small dimension.
    Pencil { transform: Matrix<T> },
    /// Block elimination `L` clearing the off-diagonal block of `B`, then a
    /// block-diagonal normalizer `Z1` with `Z1 L B L* Z1* = I`; the optimum
    /// lives in the large dimension.
    BlockElimination {
        elimination: Matrix<T>,
        normalizer: Matrix<T>,
    },
}

/// An optimal matrix attaining a point-to-set distance, in original
/// coordinates.
#[derive(Debug, Clone)]
pub struct Witness<T: Scalar> {
    /// The minimizer: `H0` (small dimension) for the contained-set problem,
    /// `G0` (large dimension) for the containing-set problem.
    pub optimum: HermitianMatrix<T>,
    /// Transforms of the reduction that produced the optimum.
    pub reduction: Reduction<T>,
    /// Distance actually attained at the optimum, re-evaluated from scratch.
    pub achieved: f64,
}

fn check_dimensions<T: Scalar>(a: &HermitianMatrix<T>, b: &HermitianMatrix<T>) -> Result<()> {
    if a.dim() > b.dim() {
        return Err(Error::FirstArgumentLarger {
            first: a.dim(),
            second: b.dim(),
        });
    }
    Ok(())
}

fn contributes(lambda: f64) -> bool {
    lambda > 0.0 && lambda.ln() > tol::TIE
}

/// Distance from `A` to the set of `m x m` positive definite matrices
/// dominating `B11`, with the optimum `H0` attaining it.
///
/// In the coordinates where `X A X* = I` and `X B11 X* = diag(λ)`, the
/// optimum is `diag(max(λ_j, 1))`; it is mapped back as
/// `H0 = X^{-1} diag(h) X^{-*}`. `B11 ⪯ H0` and `δ₂(A, H0)` equals the
/// closed-form value.
pub fn dist_to_contained_set<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Result<(DistanceResult, Witness<T>)> {
    check_dimensions(a, b)?;
    cholesky(b, tol::PIVOT)?;
    let b11 = crate::linalg::leading_block(b, a.dim())?;
    let red = pencil_reduction(a, &b11, tol::PIVOT)?;

    let optimal_diag: Vec<f64> = red
        .eigenvalues
        .iter()
        .map(|&l| if contributes(l) { l } else { 1.0 })
        .collect();
    let h_reduced: Matrix<T> = Matrix::from_real_diagonal(&optimal_diag);
    let optimum =
        HermitianMatrix::symmetrize(&(&red.inverse * &h_reduced) * &red.inverse.adjoint());
    let achieved = delta2(a, &optimum)?;

    let result = distance_from_pencil(red.eigenvalues);
    let witness = Witness {
        optimum,
        reduction: Reduction::Pencil {
            transform: red.transform,
        },
        achieved,
    };
    Ok((result, witness))
}

/// Distance from `B` to the set of `n x n` positive definite matrices whose
/// leading `m x m` block is dominated by `A`, with the optimum `G0`
/// attaining it.
///
/// The reduction composes two congruences: `L = [[I, 0], [-B12* B11^{-1}, I]]`
/// clears the off-diagonal block of `B` (and maps the constraint set onto
/// itself), then `Z1 = blockdiag(X1, Y1)` normalizes the two diagonal blocks
/// so that `B` becomes `I_n` and `A` becomes `diag(λ)^{-1}`. There the
/// optimum is `diag(g)` with `g_j = 1/λ_j` where `λ_j > 1` (for `j <= m`) and
/// `1` elsewhere; it is mapped back through `(Z1 L)^{-1} · (Z1 L)^{-*}`.
pub fn dist_to_containing_set<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Result<(DistanceResult, Witness<T>)> {
    check_dimensions(a, b)?;
    cholesky(b, tol::PIVOT)?;
    let (m, n) = (a.dim(), b.dim());
    let blocks = partition(b, m)?;
    let red = pencil_reduction(a, &blocks.b11, tol::PIVOT)?;
    for (j, &l) in red.eigenvalues.iter().enumerate() {
        if !(l > 0.0) {
            return Err(Error::NotPositiveDefinite { pivot: j });
        }
    }

    let tail = n - m;
    let elimination = elimination_matrix(&blocks, tol::PIVOT)?;
    // L^{-1} flips the sign of the lower-left block.
    let mut elimination_inv = elimination.clone();
    for i in m..n {
        for j in 0..m {
            elimination_inv[(i, j)] = -elimination_inv[(i, j)];
        }
    }

    // X1 = D^{-1/2} X maps A to diag(λ)^{-1} and B11 to I.
    let inv_sqrt: Vec<f64> = red.eigenvalues.iter().map(|&l| 1.0 / l.sqrt()).collect();
    let sqrt: Vec<f64> = red.eigenvalues.iter().map(|&l| l.sqrt()).collect();
    let x1 = &Matrix::<T>::from_real_diagonal(&inv_sqrt) * &red.transform;
    let x1_inv = &red.inverse * &Matrix::<T>::from_real_diagonal(&sqrt);

    // Y1 = S^{-*} Cholesky factor of the Schur complement, so Y1 S Y1* = I.
    let schur = schur_complement(&blocks, tol::PIVOT)?;
    let rs = cholesky(&schur, tol::PIVOT)?;
    let y1 = rs.solve_adjoint_left(&Matrix::identity(tail));
    let y1_inv = rs.matrix().adjoint();

    let zero = Matrix::zeros(m, tail);
    let zero_t = Matrix::zeros(tail, m);
    let normalizer = Matrix::from_blocks(&x1, &zero, &zero_t, &y1);
    let normalizer_inv = Matrix::from_blocks(&x1_inv, &zero, &zero_t, &y1_inv);

    let optimal_diag: Vec<f64> = (0..n)
        .map(|j| {
            if j < m && contributes(red.eigenvalues[j]) {
                1.0 / red.eigenvalues[j]
            } else {
                1.0
            }
        })
        .collect();
    let g_reduced: Matrix<T> = Matrix::from_real_diagonal(&optimal_diag);

    // G0 = (Z1 L)^{-1} G (Z1 L)^{-*} with (Z1 L)^{-1} = L^{-1} Z1^{-1}.
    let t_inv = &elimination_inv * &normalizer_inv;
    let optimum = HermitianMatrix::symmetrize(&(&t_inv * &g_reduced) * &t_inv.adjoint());
    let achieved = delta2(&optimum, b)?;

    let result = distance_from_pencil(red.eigenvalues);
    let witness = Witness {
        optimum,
        reduction: Reduction::BlockElimination {
            elimination,
            normalizer,
        },
        achieved,
    };
    Ok((result, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::delta2_plus;
    use crate::linalg::{loewner_leq, validate_hermitian};

    fn herm(rows: Vec<Vec<f64>>) -> HermitianMatrix<f64> {
        validate_hermitian(&Matrix::from_rows(rows), tol::SYMMETRY).unwrap()
    }

    fn diag(d: &[f64]) -> HermitianMatrix<f64> {
        HermitianMatrix::from_real_diagonal(d)
    }

    fn assert_close(x: f64, y: f64, tol: f64) {
        assert!((x - y).abs() <= tol, "{x} vs {y}");
    }

    #[test]
    fn contained_witness_on_diagonal_instance() {
        let a = HermitianMatrix::<f64>::identity(2);
        let b = diag(&[4.0, 1.0 / 9.0, 5.0]);
        let (result, witness) = dist_to_contained_set(&a, &b).unwrap();
        assert_close(result.finite_value(), 4f64.ln(), 1e-14);
        let expected = diag(&[4.0, 1.0]);
        assert!((witness.optimum.matrix() - expected.matrix()).norm() < 1e-12);
        assert_close(witness.achieved, 4f64.ln(), 1e-12);
        let b11 = diag(&[4.0, 1.0 / 9.0]);
        assert!(loewner_leq(&b11, &witness.optimum, tol::ORDER).unwrap());
    }

    #[test]
    fn contained_witness_identity_case() {
        let a = HermitianMatrix::<f64>::identity(2);
        let b = HermitianMatrix::<f64>::identity(3);
        let (result, witness) = dist_to_contained_set(&a, &b).unwrap();
        assert_eq!(result.finite_value(), 0.0);
        assert!((witness.optimum.matrix() - a.matrix()).norm() < 1e-13);
    }

    #[test]
    fn contained_witness_scalar_case() {
        let a = diag(&[0.25]);
        let b = HermitianMatrix::<f64>::identity(2);
        let (result, witness) = dist_to_contained_set(&a, &b).unwrap();
        assert_close(result.finite_value(), 4f64.ln(), 1e-14);
        assert_close(witness.optimum[(0, 0)], 1.0, 1e-13);
        assert_close(witness.achieved, 4f64.ln(), 1e-12);
    }

    #[test]
    fn containing_witness_scalar_case() {
        let a = diag(&[0.25]);
        let b = HermitianMatrix::<f64>::identity(2);
        let (result, witness) = dist_to_containing_set(&a, &b).unwrap();
        assert_close(result.finite_value(), 4f64.ln(), 1e-14);
        let expected = diag(&[0.25, 1.0]);
        assert!((witness.optimum.matrix() - expected.matrix()).norm() < 1e-12);
        assert_close(witness.achieved, 4f64.ln(), 1e-12);
    }

    #[test]
    fn containing_witness_identity_case() {
        let a = HermitianMatrix::<f64>::identity(2);
        let b = HermitianMatrix::<f64>::identity(4);
        let (result, witness) = dist_to_containing_set(&a, &b).unwrap();
        assert_eq!(result.finite_value(), 0.0);
        assert!((witness.optimum.matrix() - b.matrix()).norm() < 1e-13);
    }

    #[test]
    fn containing_witness_postconditions() {
        let a = HermitianMatrix::<f64>::identity(2);
        let b = diag(&[4.0, 1.0 / 9.0, 5.0]);
        let (result, witness) = dist_to_containing_set(&a, &b).unwrap();
        assert_close(result.finite_value(), 4f64.ln(), 1e-14);
        assert_close(witness.achieved, 4f64.ln(), 1e-10);
        let g11 = crate::linalg::leading_block(&witness.optimum, 2).unwrap();
        assert!(loewner_leq(&g11, &a, tol::ORDER).unwrap());
    }

    #[test]
    fn witnesses_agree_with_formula_on_dense_instance() {
        let a = herm(vec![vec![2.0, 0.4], vec![0.4, 0.8]]);
        let b = herm(vec![
            vec![1.2, 0.3, -0.1],
            vec![0.3, 2.5, 0.7],
            vec![-0.1, 0.7, 1.9],
        ]);
        let v = delta2_plus(&a, &b).unwrap().finite_value();
        let (r1, w1) = dist_to_contained_set(&a, &b).unwrap();
        let (r2, w2) = dist_to_containing_set(&a, &b).unwrap();
        assert_eq!(r1.finite_value(), v);
        assert_eq!(r2.finite_value(), v);
        assert_close(w1.achieved, v, tol::WITNESS * (1.0 + v));
        assert_close(w2.achieved, v, tol::WITNESS * (1.0 + v));

        let b11 = crate::linalg::leading_block(&b, 2).unwrap();
        assert!(loewner_leq(&b11, &w1.optimum, tol::ORDER).unwrap());
        let g11 = crate::linalg::leading_block(&w2.optimum, 2).unwrap();
        assert!(loewner_leq(&g11, &a, tol::ORDER).unwrap());
    }

    #[test]
    fn equal_dimension_witnesses() {
        let a = herm(vec![vec![3.0, 0.5], vec![0.5, 0.4]]);
        let b = herm(vec![vec![1.0, 0.2], vec![0.2, 2.0]]);
        let v = delta2_plus(&a, &b).unwrap().finite_value();
        let (_, w1) = dist_to_contained_set(&a, &b).unwrap();
        let (_, w2) = dist_to_containing_set(&a, &b).unwrap();
        assert_close(w1.achieved, v, tol::WITNESS * (1.0 + v));
        assert_close(w2.achieved, v, tol::WITNESS * (1.0 + v));
        assert_eq!(w2.optimum.dim(), 2);
    }

    #[test]
    fn reduction_transforms_do_reduce() {
        let a = herm(vec![vec![2.0, 0.4], vec![0.4, 0.8]]);
        let b = herm(vec![
            vec![1.2, 0.3, -0.1],
            vec![0.3, 2.5, 0.7],
            vec![-0.1, 0.7, 1.9],
        ]);
        let (result, w) = dist_to_containing_set(&a, &b).unwrap();
        let Reduction::BlockElimination {
            elimination,
            normalizer,
        } = &w.reduction
        else {
            panic!("wrong reduction kind");
        };
        let t = normalizer * elimination;
        let reduced_b = b.congruence(&t);
        assert!((reduced_b.matrix() - &Matrix::identity(3)).norm() < 1e-10);
        // A maps to diag(λ)^{-1} under X1 (leading block of the normalizer).
        let x1 = normalizer.block(0, 0, 2, 2);
        let reduced_a = a.congruence(&x1);
        let inv_eigs: Vec<f64> = result.pencil_eigenvalues.iter().map(|l| 1.0 / l).collect();
        assert!((reduced_a.matrix() - &Matrix::from_real_diagonal(&inv_eigs)).norm() < 1e-10);
    }
}
