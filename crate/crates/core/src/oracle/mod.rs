//! Independent verification of the closed-form distances: seeded sampling of
//! the two constraint sets, brute-force lower-bound checks of the infima, and
//! structural checkers for interlacing, majorization, congruence invariance,
//! and the block-elimination congruence.

mod rng;
mod sample;

pub use rng::SeededRng;
pub use sample::{
    normal_matrix, random_conditioned, random_hermitian, random_pd, random_unitary,
    sample_omega_minus, sample_omega_plus,
};

use crate::error::{Error, Result};
use crate::geometry::{delta2, delta2_plus, dist_to_contained_set, dist_to_containing_set};
use crate::linalg::{
    eigvalsh, elimination_matrix, leading_block, partition, schur_complement, HermitianMatrix,
    Matrix,
};
use crate::scalar::Scalar;
use crate::tol;

/// Outcome of a sampled lower-bound check against a closed-form value.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// Closed-form value being certified.
    pub formula_value: f64,
    /// Smallest sampled distance, `None` when no samples were requested.
    pub best_sampled: Option<f64>,
    pub sample_count: usize,
    /// `|distance at the constructed optimum - formula_value|`.
    pub witness_gap: f64,
    /// Samples that undercut the formula by more than the tolerance.
    pub violations: usize,
}

impl VerificationReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.violations == 0 && self.witness_gap <= tol * (1.0 + self.formula_value)
    }
}

/// Certify the closed-form distance for the pair `(A, B)` from both sides:
/// distances from `A` to sampled members of the dominating set, and from
/// sampled members of the dominated set to `B`, must never undercut the
/// value beyond `tol * (1 + value)`, and the constructed optima must attain
/// it.
pub fn verify_infimum<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    rng: &mut SeededRng,
    count: usize,
    tol: f64,
) -> Result<(VerificationReport, VerificationReport)> {
    let value = delta2_plus(a, b)?.finite_value();
    verify_infimum_against(a, b, value, rng, count, tol)
}

/// Run the sampling and witness checks of [`verify_infimum`] against an
/// externally supplied value. Lets a harness demonstrate that a wrong
/// candidate formula is caught by the same machinery.
pub fn verify_infimum_against<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    value: f64,
    rng: &mut SeededRng,
    count: usize,
    tol: f64,
) -> Result<(VerificationReport, VerificationReport)> {
    let margin = tol * (1.0 + value);

    let (_, witness_minus) = dist_to_contained_set(a, b)?;
    let mut minus = VerificationReport {
        formula_value: value,
        best_sampled: None,
        sample_count: count,
        witness_gap: (witness_minus.achieved - value).abs(),
        violations: 0,
    };
    for h in sample_omega_minus(b, a.dim(), rng, count)? {
        let d = delta2(a, &h)?;
        minus.best_sampled = Some(minus.best_sampled.map_or(d, |b| b.min(d)));
        if d < value - margin {
            minus.violations += 1;
        }
    }

    let (_, witness_plus) = dist_to_containing_set(a, b)?;
    let mut plus = VerificationReport {
        formula_value: value,
        best_sampled: None,
        sample_count: count,
        witness_gap: (witness_plus.achieved - value).abs(),
        violations: 0,
    };
    for g in sample_omega_plus(a, b.dim(), rng, count)? {
        let d = delta2(&g, b)?;
        plus.best_sampled = Some(plus.best_sampled.map_or(d, |b| b.min(d)));
        if d < value - margin {
            plus.violations += 1;
        }
    }

    Ok((minus, plus))
}

/// Eigenvalues of the leading `m x m` block interlace those of the full
/// matrix: `λ_j(B) <= λ_j(B11)` and `λ_j(B11) <= λ_{j+n-m}(B)`, all within
/// `tol * max(1, ||B||)`.
pub fn check_interlacing<T: Scalar>(b: &HermitianMatrix<T>, m: usize, tol: f64) -> Result<bool> {
    let full = eigvalsh(b)?;
    let block = eigvalsh(&leading_block(b, m)?)?;
    let slack = tol * f64::max(1.0, b.norm());
    let n = b.dim();
    for j in 0..m {
        if full[j] > block[j] + slack || block[j] > full[j + n - m] + slack {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Eigenvalue-wise comparison implied by the Loewner order: if `A ⪯ B` then
/// every ascending eigenvalue of `A` is at most the matching one of `B`,
/// within `tol * max(1, ||A||, ||B||)`.
pub fn check_majorization<T: Scalar>(
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
    let ea = eigvalsh(a)?;
    let eb = eigvalsh(b)?;
    let slack = tol * f64::max(1.0, f64::max(a.norm(), b.norm()));
    Ok(ea.iter().zip(&eb).all(|(&x, &y)| x <= y + slack))
}

/// The distance is unchanged by the congruence `M ↦ X M X*`, for `X`
/// certified nonsingular by `σ_min >= SINGULARITY * σ_max`.
pub fn check_congruence_invariance<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    x: &Matrix<T>,
    tol: f64,
) -> Result<bool> {
    let gram = HermitianMatrix::symmetrize(&x.adjoint() * x);
    let eigs = eigvalsh(&gram)?;
    let sigma_min = eigs.first().copied().unwrap_or(0.0).max(0.0).sqrt();
    let sigma_max = eigs.last().copied().unwrap_or(0.0).max(0.0).sqrt();
    if !(sigma_min >= tol::SINGULARITY * sigma_max) || sigma_max == 0.0 {
        return Err(Error::SingularTransform {
            ratio: if sigma_max > 0.0 {
                sigma_min / sigma_max
            } else {
                0.0
            },
        });
    }
    let reference = delta2(a, b)?;
    let transformed = delta2(&a.congruence(x), &b.congruence(x))?;
    Ok((transformed - reference).abs() <= tol * (1.0 + reference))
}

/// The unitriangular elimination `L = [[I, 0], [-B12* B11^{-1}, I]]` takes
/// `B` to `blockdiag(B11, B22 - B12* B11^{-1} B12)` by congruence, within
/// `tol * ||B||` in Frobenius norm.
pub fn check_schur_congruence<T: Scalar>(
    b: &HermitianMatrix<T>,
    m: usize,
    tol: f64,
) -> Result<bool> {
    let n = b.dim();
    if m >= n {
        return Err(Error::SplitOutOfRange { split: m, dim: n });
    }
    let blocks = partition(b, m)?;
    let l = elimination_matrix(&blocks, tol::PIVOT)?;
    let schur = schur_complement(&blocks, tol::PIVOT)?;
    let reduced = b.congruence(&l);
    let expected = Matrix::from_blocks(
        blocks.b11.matrix(),
        &Matrix::zeros(m, n - m),
        &Matrix::zeros(n - m, m),
        schur.matrix(),
    );
    Ok((reduced.matrix() - &expected).norm() <= tol * b.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{loewner_leq, validate_hermitian};

    fn herm(rows: Vec<Vec<f64>>) -> HermitianMatrix<f64> {
        validate_hermitian(&Matrix::from_rows(rows), tol::SYMMETRY).unwrap()
    }

    fn diag(d: &[f64]) -> HermitianMatrix<f64> {
        HermitianMatrix::from_real_diagonal(d)
    }

    #[test]
    fn scalar_infimum_certified_from_both_sides() {
        let a = diag(&[0.25]);
        let b = HermitianMatrix::<f64>::identity(2);
        let mut rng = SeededRng::new(17);
        let (minus, plus) = verify_infimum(&a, &b, &mut rng, 10_000, tol::WITNESS).unwrap();
        for report in [&minus, &plus] {
            assert!((report.formula_value - 4f64.ln()).abs() < 1e-14);
            assert_eq!(report.violations, 0);
            assert!(report.witness_gap <= 1e-9);
            assert!(report.best_sampled.unwrap() >= 4f64.ln() - 1e-9);
        }
    }

    #[test]
    fn zero_distance_pair_reports_cleanly() {
        let a = HermitianMatrix::<f64>::identity(2);
        let b = HermitianMatrix::<f64>::identity(3);
        let mut rng = SeededRng::new(1);
        let (minus, plus) = verify_infimum(&a, &b, &mut rng, 100, tol::WITNESS).unwrap();
        assert_eq!(minus.formula_value, 0.0);
        assert_eq!(minus.witness_gap, 0.0);
        assert!(minus.best_sampled.unwrap() >= 0.0);
        assert_eq!(plus.violations, 0);
    }

    #[test]
    fn seeded_random_pair_has_no_violations() {
        let mut rng = SeededRng::new(42);
        let a = random_pd::<f64>(2, 1e2, &mut rng);
        let b = random_pd::<f64>(3, 1e2, &mut rng);
        let (minus, plus) = verify_infimum(&a, &b, &mut rng, 500, tol::WITNESS).unwrap();
        assert_eq!(minus.violations, 0);
        assert_eq!(plus.violations, 0);
    }

    #[test]
    fn reports_are_bitwise_reproducible() {
        let a = diag(&[0.5, 2.0]);
        let b = diag(&[1.0, 1.0, 3.0]);
        let run = |seed| {
            let mut rng = SeededRng::new(seed);
            verify_infimum(&a, &b, &mut rng, 200, tol::WITNESS).unwrap()
        };
        assert_eq!(run(7), run(7));
        assert_ne!(run(7).0.best_sampled, run(8).0.best_sampled);
    }

    #[test]
    fn interlacing_on_diagonal_matrix() {
        let b = diag(&[1.0, 2.0, 3.0]);
        assert!(check_interlacing(&b, 2, tol::ORDER).unwrap());
    }

    #[test]
    fn interlacing_on_worked_two_by_two() {
        // eigenvalues (3 ± √5)/2 straddle the leading entry 2.
        let b = herm(vec![vec![2.0, 1.0], vec![1.0, 1.0]]);
        assert!(check_interlacing(&b, 1, tol::ORDER).unwrap());
    }

    #[test]
    fn interlacing_degenerate_split() {
        let b = herm(vec![vec![2.0, 1.0], vec![1.0, -1.0]]);
        assert!(check_interlacing(&b, 2, tol::ORDER).unwrap());
    }

    #[test]
    fn majorization_cases() {
        assert!(check_majorization(&diag(&[1.0, 3.0]), &diag(&[2.0, 4.0]), tol::ORDER).unwrap());
        assert!(!check_majorization(&diag(&[3.0, 3.0]), &diag(&[1.0, 4.0]), tol::ORDER).unwrap());
        let a = HermitianMatrix::<f64>::identity(3);
        let mut rng = SeededRng::new(2);
        let w: Matrix<f64> = normal_matrix(3, 3, &mut rng);
        let b = HermitianMatrix::symmetrize(a.matrix() + &(&w * &w.adjoint()));
        assert!(loewner_leq(&a, &b, tol::ORDER).unwrap());
        assert!(check_majorization(&a, &b, tol::ORDER).unwrap());
    }

    #[test]
    fn congruence_invariance_identity_and_scalar() {
        let a = herm(vec![vec![2.0, 0.5], vec![0.5, 1.0]]);
        let b = herm(vec![vec![1.0, 0.1], vec![0.1, 3.0]]);
        let eye = Matrix::identity(2);
        assert!(check_congruence_invariance(&a, &b, &eye, 1e-12).unwrap());
        let scaled = eye.scale(2.5);
        assert!(check_congruence_invariance(&a, &b, &scaled, 1e-12).unwrap());
    }

    #[test]
    fn congruence_invariance_random_transform() {
        let mut rng = SeededRng::new(33);
        let a = random_pd::<f64>(4, 1e2, &mut rng);
        let b = random_pd::<f64>(4, 1e2, &mut rng);
        let x = random_conditioned::<f64>(4, 1e3, &mut rng);
        assert!(check_congruence_invariance(&a, &b, &x, 1e-8).unwrap());
    }

    #[test]
    fn singular_transform_is_rejected() {
        let a = HermitianMatrix::<f64>::identity(2);
        let x = Matrix::from_rows(vec![vec![1.0, 0.0], vec![0.0, 0.0]]);
        assert!(matches!(
            check_congruence_invariance(&a, &a, &x, 1e-8),
            Err(Error::SingularTransform { .. })
        ));
    }

    #[test]
    fn schur_congruence_cases() {
        let b = diag(&[2.0, 3.0]);
        assert!(check_schur_congruence(&b, 1, 1e-12).unwrap());
        let b = herm(vec![vec![2.0, 1.0], vec![1.0, 1.0]]);
        assert!(check_schur_congruence(&b, 1, 1e-12).unwrap());
        let mut rng = SeededRng::new(6);
        let b = random_pd::<f64>(5, 1e3, &mut rng);
        for m in 1..5 {
            assert!(check_schur_congruence(&b, m, 1e-12).unwrap());
        }
        assert!(matches!(
            check_schur_congruence(&b, 5, 1e-12),
            Err(Error::SplitOutOfRange { .. })
        ));
    }
}
