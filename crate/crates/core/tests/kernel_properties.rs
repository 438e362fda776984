//! Property suites for the dense kernels: factorization residuals, agreement
//! of the two generalized-eigenvalue routes, and the Loewner order axioms.

use pdcone::linalg::{
    cholesky, classify_definiteness, eigh, eigvalsh, gen_eigvals, loewner_leq, partition,
    schur_complement, simultaneous_diagonalizer, Definiteness, HermitianMatrix, Matrix,
};
use pdcone::oracle::{normal_matrix, random_hermitian, random_pd, SeededRng};
use pdcone::scalar::{Complex64, Scalar};
use pdcone::tol;

use proptest::prelude::*;

/// Independent route to the pencil eigenvalues: eigendecompose `A`, form
/// `A^{-1/2} B A^{-1/2}` spectrally, and take its eigenvalues. The library
/// route goes through the Cholesky factor instead.
fn pencil_eigs_by_inverse_sqrt<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Vec<f64> {
    let s = eigh(a).unwrap();
    let inv_sqrt: Vec<f64> = s.eigenvalues().iter().map(|&l| 1.0 / l.sqrt()).collect();
    let v = s.vectors();
    let a_inv_sqrt = &(v * &Matrix::from_real_diagonal(&inv_sqrt)) * &v.adjoint();
    let reduced = HermitianMatrix::symmetrize(&(&a_inv_sqrt * b.matrix()) * &a_inv_sqrt);
    eigvalsh(&reduced).unwrap()
}

#[test]
fn generalized_eigenvalues_match_inverse_sqrt_route() {
    let mut rng = SeededRng::new(101);
    for trial in 0..60 {
        let n = 2 + (trial % 11);
        let a = random_pd::<f64>(n, 1e3, &mut rng);
        let b = random_hermitian::<f64>(n, 2.0, &mut rng);
        let via_cholesky = gen_eigvals(&a, &b, tol::PIVOT).unwrap();
        let via_sqrt = pencil_eigs_by_inverse_sqrt(&a, &b);
        let scale = f64::max(1.0, via_sqrt.iter().fold(0.0f64, |m, &x| m.max(x.abs())));
        for (x, y) in via_cholesky.iter().zip(&via_sqrt) {
            assert!((x - y).abs() <= 1e-10 * scale, "{x} vs {y} (n = {n})");
        }
    }
}

#[test]
fn generalized_eigenvalues_match_inverse_sqrt_route_complex() {
    let mut rng = SeededRng::new(202);
    for trial in 0..30 {
        let n = 2 + (trial % 6);
        let a = random_pd::<Complex64>(n, 1e3, &mut rng);
        let b = random_hermitian::<Complex64>(n, 2.0, &mut rng);
        let via_cholesky = gen_eigvals(&a, &b, tol::PIVOT).unwrap();
        let via_sqrt = pencil_eigs_by_inverse_sqrt(&a, &b);
        let scale = f64::max(1.0, via_sqrt.iter().fold(0.0f64, |m, &x| m.max(x.abs())));
        for (x, y) in via_cholesky.iter().zip(&via_sqrt) {
            assert!((x - y).abs() <= 1e-10 * scale);
        }
    }
}

#[test]
fn simultaneous_diagonalizer_residuals() {
    let mut rng = SeededRng::new(303);
    for trial in 0..60 {
        let n = 2 + (trial % 11);
        let a = random_pd::<f64>(n, 1e3, &mut rng);
        let b = random_hermitian::<f64>(n, 2.0, &mut rng);
        let (x, d) = simultaneous_diagonalizer(&a, &b).unwrap();
        let budget = 1e-10 * f64::max(a.norm(), b.norm());
        let xa = &(&x * a.matrix()) * &x.adjoint();
        let xb = &(&x * b.matrix()) * &x.adjoint();
        assert!((&xa - &Matrix::identity(n)).norm() <= budget);
        assert!((&xb - &Matrix::from_real_diagonal(&d)).norm() <= budget);
        let mut sorted = d.clone();
        sorted.sort_by(f64::total_cmp);
        assert_eq!(d, sorted);
    }
}

#[test]
fn cholesky_roundtrip_at_high_condition() {
    let mut rng = SeededRng::new(404);
    for trial in 0..50 {
        let n = 2 + (trial % 20);
        let h = random_pd::<f64>(n, 1e6, &mut rng);
        let r = cholesky(&h, tol::PIVOT).unwrap();
        let residual = (&(&r.matrix().adjoint() * r.matrix()) - h.matrix()).norm();
        assert!(residual <= 1e-12 * h.norm(), "n = {n}: {residual:e}");
    }
}

#[test]
fn eigh_reconstruction_residual() {
    let mut rng = SeededRng::new(505);
    for trial in 0..50 {
        let n = 2 + (trial % 20);
        let h = random_pd::<f64>(n, 1e6, &mut rng);
        let s = eigh(&h).unwrap();
        assert!((&s.reconstruct() - h.matrix()).norm() <= 1e-11 * h.norm());
        let vtv = &s.vectors().adjoint() * s.vectors();
        assert!((&vtv - &Matrix::identity(n)).norm() <= 1e-12 * n as f64);
    }
}

#[test]
fn schur_complement_of_pd_is_pd() {
    let mut rng = SeededRng::new(606);
    for trial in 0..500 {
        let n = 2 + (trial % 7);
        let b = random_pd::<f64>(n, 1e4, &mut rng);
        let m = 1 + (trial % (n - 1));
        let p = partition(&b, m).unwrap();
        let s = schur_complement(&p, tol::PIVOT).unwrap();
        assert_eq!(
            classify_definiteness(&s, tol::ORDER).unwrap(),
            Definiteness::PositiveDefinite
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn loewner_is_reflexive(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = SeededRng::new(seed);
        let a = random_hermitian::<f64>(n, 3.0, &mut rng);
        prop_assert!(loewner_leq(&a, &a, tol::ORDER).unwrap());
    }

    #[test]
    fn loewner_is_transitive_on_psd_chains(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = SeededRng::new(seed);
        let a = random_hermitian::<f64>(n, 2.0, &mut rng);
        let w1: Matrix<f64> = normal_matrix(n, n, &mut rng);
        let w2: Matrix<f64> = normal_matrix(n, n, &mut rng);
        let b = HermitianMatrix::symmetrize(a.matrix() + &(&w1 * &w1.adjoint()));
        let c = HermitianMatrix::symmetrize(b.matrix() + &(&w2 * &w2.adjoint()));
        prop_assert!(loewner_leq(&a, &b, tol::ORDER).unwrap());
        prop_assert!(loewner_leq(&b, &c, tol::ORDER).unwrap());
        prop_assert!(loewner_leq(&a, &c, tol::ORDER).unwrap());
    }

    #[test]
    fn loewner_is_antisymmetric_up_to_tolerance(seed in any::<u64>(), n in 1usize..7) {
        let mut rng = SeededRng::new(seed);
        let a = random_hermitian::<f64>(n, 2.0, &mut rng);
        // Perturb within the order tolerance: both directions must hold and
        // the matrices must be correspondingly close.
        let e = random_hermitian::<f64>(n, 1.0, &mut rng);
        let scale = f64::max(1.0, a.norm());
        let b = HermitianMatrix::symmetrize(
            a.matrix() + &e.matrix().scale(0.25 * tol::ORDER * scale / f64::max(e.norm(), 1e-300)),
        );
        if loewner_leq(&a, &b, tol::ORDER).unwrap() && loewner_leq(&b, &a, tol::ORDER).unwrap() {
            let dist = (a.matrix() - b.matrix()).norm();
            prop_assert!(dist <= n as f64 * tol::ORDER * scale);
        }
    }

    #[test]
    fn partition_reassembles_exactly(seed in any::<u64>(), n in 2usize..8) {
        let mut rng = SeededRng::new(seed);
        let b = random_hermitian::<Complex64>(n, 2.0, &mut rng);
        for m in 1..=n {
            let p = partition(&b, m).unwrap();
            prop_assert_eq!(p.reassemble(), b.clone());
        }
    }

    #[test]
    fn validate_accepts_what_it_produces(seed in any::<u64>(), n in 1usize..8) {
        let mut rng = SeededRng::new(seed);
        let h = random_hermitian::<f64>(n, 5.0, &mut rng);
        let again = pdcone::validate_hermitian(h.matrix(), tol::SYMMETRY).unwrap();
        prop_assert_eq!(h, again);
    }
}
