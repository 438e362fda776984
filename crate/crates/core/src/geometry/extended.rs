//! Extension of the cross-dimensional distance to the boundary of the cone.
//!
//! For positive semidefinite arguments the two point-to-set distances need
//! not agree: a singular first argument is infinitely far from every
//! positive definite matrix, so both sides are infinite; a singular second
//! argument only forces the containing-set side to infinity, while the
//! contained-set side keeps the closed-form value.

use crate::error::{Error, Result};
use crate::geometry::{delta2_plus, distance_from_pencil, ExtendedReal};
use crate::linalg::{
    classify_definiteness, gen_eigvals, leading_block, Definiteness, HermitianMatrix,
};
use crate::scalar::Scalar;
use crate::tol;

/// The two point-to-set distances for positive semidefinite arguments.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedDistance {
    /// Distance from `A` to the set of matrices dominating `B11`.
    pub lower_set_value: ExtendedReal,
    /// Distance from `B` to the set of matrices whose leading block is
    /// dominated by `A`.
    pub upper_set_value: ExtendedReal,
}

/// Evaluate both set distances for positive semidefinite `A` (`m x m`) and
/// `B` (`n x n`), `m <= n`. Indefinite input is rejected.
pub fn delta2_plus_extended<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
) -> Result<ExtendedDistance> {
    let (m, n) = (a.dim(), b.dim());
    if m > n {
        return Err(Error::FirstArgumentLarger {
            first: m,
            second: n,
        });
    }
    let class_a = classify_definiteness(a, tol::ORDER)?;
    let class_b = classify_definiteness(b, tol::ORDER)?;
    if class_a == Definiteness::NotPsd || class_b == Definiteness::NotPsd {
        return Err(Error::NotPsd);
    }

    match (class_a, class_b) {
        (Definiteness::PositiveSemidefiniteSingular, _) => Ok(ExtendedDistance {
            lower_set_value: ExtendedReal::Infinity,
            upper_set_value: ExtendedReal::Infinity,
        }),
        (Definiteness::PositiveDefinite, Definiteness::PositiveDefinite) => {
            let value = delta2_plus(a, b)?.value;
            Ok(ExtendedDistance {
                lower_set_value: value,
                upper_set_value: value,
            })
        }
        (Definiteness::PositiveDefinite, Definiteness::PositiveSemidefiniteSingular) => {
            let b11 = leading_block(b, m)?;
            let eigs = gen_eigvals(a, &b11, tol::PIVOT)?;
            Ok(ExtendedDistance {
                lower_set_value: distance_from_pencil(eigs).value,
                upper_set_value: ExtendedReal::Infinity,
            })
        }
        (Definiteness::NotPsd, _) | (_, Definiteness::NotPsd) => unreachable!(),
    }
}
