//! Seeded random matrices and samplers for the two constraint sets.

use crate::error::{Error, Result};
use crate::linalg::{
    cholesky, gen_eigvals, loewner_leq, partition, HermitianMatrix, Matrix,
};
use crate::oracle::rng::SeededRng;
use crate::scalar::{Scalar, ScalarField};
use crate::tol;

fn normal_scalar<T: Scalar>(rng: &mut SeededRng) -> T {
    match T::FIELD {
        ScalarField::Real => T::from_re(rng.normal()),
        ScalarField::Complex => {
            let re = rng.normal();
            let im = rng.normal();
            T::from_re_im(re, im)
        }
    }
}

/// Matrix with independent standard normal entries (independent real and
/// imaginary parts over the complex field).
pub fn normal_matrix<T: Scalar>(rows: usize, cols: usize, rng: &mut SeededRng) -> Matrix<T> {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = normal_scalar(rng);
        }
    }
    m
}

/// Haar-like random unitary (orthogonal over the reals) via modified
/// Gram-Schmidt on a normal matrix; degenerate columns are redrawn.
pub fn random_unitary<T: Scalar>(dim: usize, rng: &mut SeededRng) -> Matrix<T> {
    let mut q: Matrix<T> = Matrix::zeros(dim, dim);
    let mut col: Vec<T> = vec![T::zero(); dim];
    for j in 0..dim {
        loop {
            for x in col.iter_mut() {
                *x = normal_scalar(rng);
            }
            for k in 0..j {
                let mut proj = T::zero();
                for i in 0..dim {
                    proj = proj + q[(i, k)].conj() * col[i];
                }
                for i in 0..dim {
                    col[i] = col[i] - q[(i, k)] * proj;
                }
            }
            let norm = col.iter().map(|x| x.abs_sq()).sum::<f64>().sqrt();
            if norm > 1e-8 {
                for i in 0..dim {
                    q[(i, j)] = col[i].scale(1.0 / norm);
                }
                break;
            }
        }
    }
    q
}

/// Random Hermitian matrix with entries of order `scale`.
pub fn random_hermitian<T: Scalar>(dim: usize, scale: f64, rng: &mut SeededRng) -> HermitianMatrix<T> {
    HermitianMatrix::symmetrize(normal_matrix(dim, dim, rng).scale(scale))
}

/// Random positive definite matrix `Q diag(d) Q*` with `d` log-uniform on
/// `[1, max_condition]`, so the condition number is at most `max_condition`.
pub fn random_pd<T: Scalar>(
    dim: usize,
    max_condition: f64,
    rng: &mut SeededRng,
) -> HermitianMatrix<T> {
    debug_assert!(max_condition >= 1.0);
    let q = random_unitary::<T>(dim, rng);
    let d: Vec<f64> = (0..dim).map(|_| rng.log_uniform(1.0, max_condition)).collect();
    HermitianMatrix::symmetrize(&(&q * &Matrix::from_real_diagonal(&d)) * &q.adjoint())
}

/// Random nonsingular matrix `U diag(d) V*` with condition number at most
/// `max_condition`.
pub fn random_conditioned<T: Scalar>(
    dim: usize,
    max_condition: f64,
    rng: &mut SeededRng,
) -> Matrix<T> {
    let u = random_unitary::<T>(dim, rng);
    let v = random_unitary::<T>(dim, rng);
    let d: Vec<f64> = (0..dim).map(|_| rng.log_uniform(1.0, max_condition)).collect();
    &(&u * &Matrix::from_real_diagonal(&d)) * &v.adjoint()
}

/// Sample matrices dominating the leading `m x m` block of `B`: each sample
/// is `B11 + W W*` with `W` scaled standard normal, the scale drawn
/// log-uniformly from `[1e-3, 1e1]`. Domination holds by construction.
pub fn sample_omega_minus<T: Scalar>(
    b: &HermitianMatrix<T>,
    m: usize,
    rng: &mut SeededRng,
    count: usize,
) -> Result<Vec<HermitianMatrix<T>>> {
    let blocks = partition(b, m)?;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let scale = rng.log_uniform(1e-3, 1e1);
        let w: Matrix<T> = normal_matrix(m, m, rng).scale(scale);
        let bump = &w * &w.adjoint();
        out.push(HermitianMatrix::symmetrize(
            blocks.b11.matrix() + &bump,
        ));
    }
    Ok(out)
}

const OMEGA_PLUS_RETRIES: usize = 100;

/// Sample `n x n` positive definite matrices whose leading `m x m` block is
/// dominated by `A`: draw a random positive definite `G`, shrink its leading
/// block by the largest factor `t <= 1` with `t G11 ⪯ A` (from the top
/// pencil eigenvalue), and keep the result if it is still positive definite,
/// redrawing otherwise.
///
/// The eigenvalue range of the draw is anchored at the smallest eigenvalue
/// of `A`, which caps the top pencil eigenvalue at 2 and so keeps the shrink
/// factor at `1/2` or above; redraws are then rare.
pub fn sample_omega_plus<T: Scalar>(
    a: &HermitianMatrix<T>,
    n: usize,
    rng: &mut SeededRng,
    count: usize,
) -> Result<Vec<HermitianMatrix<T>>> {
    let m = a.dim();
    if m > n {
        return Err(Error::FirstArgumentLarger {
            first: m,
            second: n,
        });
    }
    let anchor = crate::linalg::eigvalsh(a)?.first().copied().unwrap_or(1.0);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut accepted = None;
        for _ in 0..OMEGA_PLUS_RETRIES {
            let q = random_unitary::<T>(n, rng);
            let d: Vec<f64> = (0..n)
                .map(|_| rng.log_uniform(0.05 * anchor, 2.0 * anchor))
                .collect();
            let g =
                HermitianMatrix::symmetrize(&(&q * &Matrix::from_real_diagonal(&d)) * &q.adjoint());
            let blocks = partition(&g, m)?;
            let top = gen_eigvals(a, &blocks.b11, tol::PIVOT)?
                .last()
                .copied()
                .unwrap_or(1.0);
            let t = if top > 1.0 { 1.0 / top } else { 1.0 };
            let shrunk = HermitianMatrix::symmetrize(Matrix::from_blocks(
                &blocks.b11.matrix().scale(t),
                &blocks.b12,
                &blocks.b12.adjoint(),
                blocks.b22.matrix(),
            ));
            if cholesky(&shrunk, tol::PIVOT).is_err() {
                continue;
            }
            let shrunk_11 = partition(&shrunk, m)?.b11;
            if !loewner_leq(&shrunk_11, a, tol::ORDER)? {
                continue;
            }
            accepted = Some(shrunk);
            break;
        }
        match accepted {
            Some(g) => out.push(g),
            None => {
                return Err(Error::SamplingFailure {
                    retries: OMEGA_PLUS_RETRIES,
                })
            }
        }
    }
    Ok(out)
}
