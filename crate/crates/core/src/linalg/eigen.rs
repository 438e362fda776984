//! Hermitian eigendecomposition by cyclic Jacobi sweeps.
//!
//! One complex rotation per pivot: the off-diagonal entry is first rotated
//! onto the real axis by a phase, then annihilated by a plane rotation. Real
//! input keeps every intermediate exactly real, so the same code serves both
//! fields. Convergence is declared when the off-diagonal Frobenius mass drops
//! below [`tol::JACOBI_CONVERGENCE`] times the input norm; the method
//! converges quadratically, so the cap of [`tol::JACOBI_MAX_SWEEPS`] sweeps is
//! reached only by pathological (non-finite) input.

use crate::error::{Error, Result};
use crate::linalg::hermitian::HermitianMatrix;
use crate::linalg::matrix::Matrix;
use crate::scalar::Scalar;
use crate::tol;

/// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and
/// an orthonormal (unitary) frame of eigenvectors as matrix columns, so that
/// `H = V diag(λ) V*`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum<T: Scalar> {
    eigenvalues: Vec<f64>,
    vectors: Matrix<T>,
}

impl<T: Scalar> Spectrum<T> {
    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// Eigenvector frame; column `j` pairs with `eigenvalues()[j]`.
    pub fn vectors(&self) -> &Matrix<T> {
        &self.vectors
    }

    /// Column `j` as a vector.
    pub fn vector(&self, j: usize) -> Vec<T> {
        (0..self.vectors.rows())
            .map(|i| self.vectors[(i, j)])
            .collect()
    }

    /// `V diag(λ) V*`, for residual checks.
    pub fn reconstruct(&self) -> Matrix<T> {
        let d = Matrix::from_real_diagonal(&self.eigenvalues);
        &(&self.vectors * &d) * &self.vectors.adjoint()
    }
}

/// Off-diagonal Frobenius mass, `sqrt(2 Σ_{p<q} |m_pq|^2)`.
fn off_diagonal_mass<T: Scalar>(m: &Matrix<T>) -> f64 {
    let n = m.rows();
    let mut s = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            s += m[(p, q)].abs_sq();
        }
    }
    (2.0 * s).sqrt()
}

fn jacobi<T: Scalar>(h: &HermitianMatrix<T>, want_vectors: bool) -> Result<(Vec<f64>, Matrix<T>)> {
    let n = h.dim();
    let mut m = h.matrix().clone();
    let mut v: Matrix<T> = if want_vectors {
        Matrix::identity(n)
    } else {
        Matrix::zeros(0, 0)
    };
    let threshold = tol::JACOBI_CONVERGENCE * h.norm();

    let mut converged = off_diagonal_mass(&m) <= threshold;
    let mut sweeps = 0;
    while !converged && sweeps < tol::JACOBI_MAX_SWEEPS {
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let beta = m[(p, q)];
                let abs_beta = beta.abs();
                if abs_beta == 0.0 {
                    continue;
                }
                // Phase taking the pivot entry to the real axis, then the
                // classic plane rotation on the real 2x2 block.
                let u = beta.scale(1.0 / abs_beta);
                let alpha = m[(p, p)].re();
                let gamma = m[(q, q)].re();
                let theta = (gamma - alpha) / (2.0 * abs_beta);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let su_conj = u.conj().scale(s);

                m[(p, p)] = T::from_re(alpha - t * abs_beta);
                m[(q, q)] = T::from_re(gamma + t * abs_beta);
                m[(p, q)] = T::zero();
                m[(q, p)] = T::zero();
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    let new_p = mkp.scale(c) - su_conj * mkq;
                    let new_q = mkp.scale(s) + u.conj().scale(c) * mkq;
                    m[(k, p)] = new_p;
                    m[(p, k)] = new_p.conj();
                    m[(k, q)] = new_q;
                    m[(q, k)] = new_q.conj();
                }
                if want_vectors {
                    for k in 0..n {
                        let vkp = v[(k, p)];
                        let vkq = v[(k, q)];
                        v[(k, p)] = vkp.scale(c) - su_conj * vkq;
                        v[(k, q)] = vkp.scale(s) + u.conj().scale(c) * vkq;
                    }
                }
            }
        }
        sweeps += 1;
        converged = off_diagonal_mass(&m) <= threshold;
    }
    if !converged {
        return Err(Error::ConvergenceFailure { sweeps });
    }

    // Ascending sort; stable in the solver's output order on ties.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| m[(a, a)].re().total_cmp(&m[(b, b)].re()));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[(i, i)].re()).collect();
    let vectors = if want_vectors {
        Matrix::from_fn(n, n, |i, j| v[(i, order[j])])
    } else {
        v
    };
    Ok((eigenvalues, vectors))
}

/// Full eigendecomposition.
pub fn eigh<T: Scalar>(h: &HermitianMatrix<T>) -> Result<Spectrum<T>> {
    let (eigenvalues, vectors) = jacobi(h, true)?;
    Ok(Spectrum {
        eigenvalues,
        vectors,
    })
}

/// Ascending eigenvalues only; skips accumulating the eigenvector frame.
pub fn eigvalsh<T: Scalar>(h: &HermitianMatrix<T>) -> Result<Vec<f64>> {
    jacobi(h, false).map(|(eigenvalues, _)| eigenvalues)
}
