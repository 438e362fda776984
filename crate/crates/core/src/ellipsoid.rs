//! Origin-centered ellipsoids `{x : x* A x <= 1}` for positive definite `A`,
//! and containment tests within and across dimensions.
//!
//! Containment is equivalent to the Loewner order with the arguments
//! reversed: a larger shape matrix means a smaller ellipsoid. Across
//! dimensions the small ellipsoid is embedded by padding coordinates with
//! zeros, which reduces the test to the leading block of the outer shape.

use crate::error::{Error, Result};
use crate::linalg::{
    classify_definiteness, eigvalsh, leading_block, loewner_leq, Definiteness, HermitianMatrix,
};
use crate::scalar::Scalar;
use crate::tol;

/// An origin-centered ellipsoid, identified with its positive definite shape
/// matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Ellipsoid<T: Scalar> {
    shape: HermitianMatrix<T>,
}

impl<T: Scalar> Ellipsoid<T> {
    /// Wrap a shape matrix, rejecting anything not positive definite:
    /// singular shapes would describe degenerate ellipsoids with infinite
    /// axes.
    pub fn new(shape: HermitianMatrix<T>) -> Result<Self> {
        match classify_definiteness(&shape, tol::ORDER)? {
            Definiteness::PositiveDefinite => Ok(Ellipsoid { shape }),
            Definiteness::PositiveSemidefiniteSingular | Definiteness::NotPsd => {
                Err(Error::NotPositiveDefinite { pivot: 0 })
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.shape.dim()
    }

    pub fn shape(&self) -> &HermitianMatrix<T> {
        &self.shape
    }
}

/// `true` iff the inner ellipsoid is contained in the outer one (equal
/// dimensions): containment holds iff `outer.shape ⪯ inner.shape`.
pub fn contains<T: Scalar>(
    outer: &Ellipsoid<T>,
    inner: &Ellipsoid<T>,
    tol: f64,
) -> Result<bool> {
    loewner_leq(&outer.shape, &inner.shape, tol)
}

/// `true` iff the inner `m`-dimensional ellipsoid, embedded into `n`
/// coordinates by zero padding, is contained in the outer one: containment
/// holds iff the leading `m x m` block of the outer shape is dominated by
/// the inner shape.
pub fn embedded_contains<T: Scalar>(
    outer: &Ellipsoid<T>,
    inner: &Ellipsoid<T>,
    tol: f64,
) -> Result<bool> {
    if inner.dim() > outer.dim() {
        return Err(Error::InnerDimensionLarger {
            inner: inner.dim(),
            outer: outer.dim(),
        });
    }
    let outer_block = leading_block(&outer.shape, inner.dim())?;
    loewner_leq(&outer_block, &inner.shape, tol)
}

/// Semi-axis lengths `1/sqrt(λ_j)`, descending (longest axis first).
pub fn semiaxes<T: Scalar>(e: &Ellipsoid<T>) -> Result<Vec<f64>> {
    let eigs = eigvalsh(&e.shape)?;
    Ok(eigs.iter().map(|&l| 1.0 / l.sqrt()).collect())
}
