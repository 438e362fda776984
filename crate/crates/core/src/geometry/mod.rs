//! Geometric distances on the positive definite cone.
//!
//! [`delta2`] is the affine-invariant Riemannian distance between positive
//! definite matrices of one dimension. [`delta2_plus`] extends it to a pair
//! of different dimensions `m <= n`: it equals both the distance from the
//! small matrix to the set of same-size matrices dominating the leading block
//! of the large one, and the distance from the large matrix to the set of
//! large matrices whose leading block is dominated by the small one. The two
//! point-to-set problems are solved in closed form with explicit optima by
//! [`dist_to_contained_set`] and [`dist_to_containing_set`].

mod extended;
mod witness;

pub use extended::{delta2_plus_extended, ExtendedDistance};
pub use witness::{dist_to_contained_set, dist_to_containing_set, Reduction, Witness};

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{cholesky, gen_eigvals, leading_block, HermitianMatrix};
use crate::scalar::Scalar;
use crate::tol;

/// Nonnegative extended real. Infinity is a distinguished value, never an
/// IEEE overflow.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedReal {
    Finite(f64),
    Infinity,
}

impl ExtendedReal {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtendedReal::Finite(v) => Some(v),
            ExtendedReal::Infinity => None,
        }
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::Finite(v) => write!(f, "{v}"),
            ExtendedReal::Infinity => f.write_str("inf"),
        }
    }
}

/// Result of a cross-dimensional distance computation.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceResult {
    /// The distance.
    pub value: ExtendedReal,
    /// Ascending eigenvalues of the pencil `(A, B11)`.
    pub pencil_eigenvalues: Vec<f64>,
    /// How many pencil eigenvalues exceed 1 beyond the tie margin and so
    /// contribute to the value.
    pub contributing_count: usize,
}

impl DistanceResult {
    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }

    /// Finite value; panics on infinity (only the PSD extension produces
    /// infinite results).
    pub fn finite_value(&self) -> f64 {
        self.value
            .finite()
            .expect("distance between positive definite matrices is finite")
    }
}

/// Which side of 1 an eigenvalue must lie on to contribute its squared log.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBranch {
    AboveOne,
    BelowOne,
}

/// Root of the summed squared logarithms of the eigenvalues on one side of 1,
/// together with the number of contributing eigenvalues. An eigenvalue
/// contributes only when its log clears [`tol::TIE`], so ties at 1 add
/// exactly zero. Nonpositive eigenvalues never contribute.
///
/// The distance formulas use [`LogBranch::AboveOne`]; the opposite branch
/// exists so consistency checks can demonstrate that the two readings differ.
pub fn log_contribution(eigenvalues: &[f64], branch: LogBranch) -> (f64, usize) {
    let mut sum = 0.0;
    let mut count = 0;
    for &l in eigenvalues {
        if l <= 0.0 {
            continue;
        }
        let ln = l.ln();
        let take = match branch {
            LogBranch::AboveOne => ln > tol::TIE,
            LogBranch::BelowOne => ln < -tol::TIE,
        };
        if take {
            sum += ln * ln;
            count += 1;
        }
    }
    (sum.sqrt(), count)
}

fn sum_of_squared_logs(eigenvalues: &[f64]) -> Result<f64> {
    let mut sum = 0.0;
    for (j, &l) in eigenvalues.iter().enumerate() {
        if !(l > 0.0) {
            return Err(Error::NotPositiveDefinite { pivot: j });
        }
        let ln = l.ln();
        sum += ln * ln;
    }
    Ok(sum.sqrt())
}

/// Affine-invariant Riemannian distance
/// `δ₂(A, B) = [Σ_j log² λ_j(A^{-1}B)]^{1/2}` between positive definite
/// matrices of equal dimension.
///
/// Symmetric in its arguments, invariant under congruence `A ↦ XAX*` by any
/// nonsingular `X` and under simultaneous inversion.
pub fn delta2<T: Scalar>(a: &HermitianMatrix<T>, b: &HermitianMatrix<T>) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    cholesky(b, tol::PIVOT)?;
    let eigs = gen_eigvals(a, b, tol::PIVOT)?;
    sum_of_squared_logs(&eigs)
}

/// Distance between positive definite `A` (`m x m`) and `B` (`n x n`) with
/// `m <= n`:
/// `δ₂⁺(A, B) = [Σ_{λ_j > 1} log² λ_j(A^{-1}B_{11})]^{1/2}`,
/// the common value of the two point-to-set distances realized by
/// [`dist_to_contained_set`] and [`dist_to_containing_set`].
///
/// The arguments are ordered: `m > n` is an error, not a swap, and for
/// `m = n` the two orders generally give different values.
pub fn delta2_plus<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Result<DistanceResult> {
    let eigs = plus_pencil(a, b)?;
    Ok(distance_from_pencil(eigs))
}

/// Eigenvalues of `(A, B11)` after certifying `A` and the whole of `B`
/// positive definite and checking the dimension order.
pub(crate) fn plus_pencil<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Result<Vec<f64>> {
    let (m, n) = (a.dim(), b.dim());
    if m > n {
        return Err(Error::FirstArgumentLarger {
            first: m,
            second: n,
        });
    }
    cholesky(b, tol::PIVOT)?;
    let b11 = leading_block(b, m)?;
    gen_eigvals(a, &b11, tol::PIVOT)
}

pub(crate) fn distance_from_pencil(pencil_eigenvalues: Vec<f64>) -> DistanceResult {
    let (value, contributing_count) = log_contribution(&pencil_eigenvalues, LogBranch::AboveOne);
    DistanceResult {
        value: ExtendedReal::Finite(value),
        pencil_eigenvalues,
        contributing_count,
    }
}

/// The decomposition of the equal-dimension distance into its two ordered
/// halves: `forward² + backward² = total²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PythagoreanSplit {
    /// `δ₂⁺(A, B)`.
    pub forward: f64,
    /// `δ₂⁺(B, A)`.
    pub backward: f64,
    /// `δ₂(A, B)`.
    pub total: f64,
}

/// Split `δ₂(A, B)` into the squared-orthogonal contributions of the two
/// argument orders of `δ₂⁺`.
pub fn pythagorean_split<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Result<PythagoreanSplit> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    Ok(PythagoreanSplit {
        forward: delta2_plus(a, b)?.finite_value(),
        backward: delta2_plus(b, a)?.finite_value(),
        total: delta2(a, b)?,
    })
}
