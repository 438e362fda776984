//! `dist`: distance between two matrices read from files.

use std::path::PathBuf;

use serde_json::{json, Value};

use pdcone::geometry::{
    delta2_plus, delta2_plus_extended, dist_to_contained_set, dist_to_containing_set,
};
use pdcone::linalg::{
    classify_definiteness, eigvalsh, gen_eigvals, leading_block, Definiteness, HermitianMatrix,
};
use pdcone::scalar::Scalar;
use pdcone::tol;

use crate::io::{
    extended_value, finite_num, matrix_value, promote_pair, read_matrix, to_json_string,
    MatrixPair, NamedMatrix,
};
use crate::{Failure, EXIT_DEFINITENESS, EXIT_DIM_ORDER, EXIT_PARSE};

pub struct DistArgs {
    pub a: PathBuf,
    pub b: PathBuf,
    pub allow_swap: bool,
    pub witness: bool,
    pub extended: bool,
}

pub fn run(args: &DistArgs) -> Result<u8, Failure> {
    let first = read_matrix(&args.a).map_err(|e| Failure::new(EXIT_PARSE, e))?;
    let second = read_matrix(&args.b).map_err(|e| Failure::new(EXIT_PARSE, e))?;

    let (a, b, swapped) = if first.matrix.dim() > second.matrix.dim() {
        if !args.allow_swap {
            return Err(Failure::new(
                EXIT_DIM_ORDER,
                format!(
                    "first argument has dimension {} > {}; pass --allow-swap to reorder",
                    first.matrix.dim(),
                    second.matrix.dim()
                ),
            ));
        }
        (second, first, true)
    } else {
        (first, second, false)
    };

    let body = match promote_pair(&a.matrix, &b.matrix) {
        MatrixPair::Real(x, y) => dist_body(&a, &b, &x, &y, args)?,
        MatrixPair::Complex(x, y) => dist_body(&a, &b, &x, &y, args)?,
    };

    let mut out = json!({
        "a": {"name": a.name, "dim": a.matrix.dim(), "field": a.matrix.field().as_str()},
        "b": {"name": b.name, "dim": b.matrix.dim(), "field": b.matrix.field().as_str()},
        "swapped": swapped,
    });
    merge(&mut out, body);
    print!("{}", to_json_string(&out));
    Ok(0)
}

fn merge(target: &mut Value, extra: Value) {
    if let (Value::Object(t), Value::Object(e)) = (target, extra) {
        t.extend(e);
    }
}

fn compute_error(e: pdcone::Error) -> Failure {
    Failure::new(EXIT_PARSE, format!("computation failed: {e}"))
}

fn dist_body<T: Scalar>(
    a_named: &NamedMatrix,
    b_named: &NamedMatrix,
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    args: &DistArgs,
) -> Result<Value, Failure> {
    let class_a = classify_definiteness(a, tol::ORDER).map_err(compute_error)?;
    let class_b = classify_definiteness(b, tol::ORDER).map_err(compute_error)?;
    let both_pd =
        class_a == Definiteness::PositiveDefinite && class_b == Definiteness::PositiveDefinite;

    if both_pd {
        let result = delta2_plus(a, b).map_err(compute_error)?;
        let value = result.finite_value();
        let mut out = json!({
            "value": finite_num(value),
            "pencil_eigenvalues": result.pencil_eigenvalues.iter().map(|&l| finite_num(l)).collect::<Vec<_>>(),
            "k": result.contributing_count,
            "finite": true,
        });
        if args.extended {
            merge(
                &mut out,
                json!({
                    "lower_set_value": finite_num(value),
                    "upper_set_value": finite_num(value),
                }),
            );
        }
        if args.witness {
            merge(&mut out, json!({"witnesses": witnesses_json(a, b, value)?}));
        }
        Ok(out)
    } else {
        if !args.extended {
            let offender = if class_a != Definiteness::PositiveDefinite {
                (&a_named.name, class_a)
            } else {
                (&b_named.name, class_b)
            };
            return Err(Failure::new(
                EXIT_DEFINITENESS,
                format!(
                    "matrix {:?} is not positive definite ({}); pass --extended for semidefinite semantics",
                    offender.0,
                    definiteness_label(offender.1)
                ),
            ));
        }
        let ext = delta2_plus_extended(a, b).map_err(|e| match e {
            pdcone::Error::NotPsd => Failure::new(
                EXIT_DEFINITENESS,
                "indefinite matrix: even --extended requires positive semidefinite input",
            ),
            other => compute_error(other),
        })?;
        // The pencil is well-defined whenever A is nonsingular.
        let (pencil, k) = if class_a == Definiteness::PositiveDefinite {
            let b11 = leading_block(b, a.dim()).map_err(compute_error)?;
            let eigs = gen_eigvals(a, &b11, tol::PIVOT).map_err(compute_error)?;
            let (_, k) = pdcone::geometry::log_contribution(
                &eigs,
                pdcone::geometry::LogBranch::AboveOne,
            );
            (eigs, k)
        } else {
            (Vec::new(), 0)
        };
        Ok(json!({
            "value": extended_value(ext.lower_set_value),
            "lower_set_value": extended_value(ext.lower_set_value),
            "upper_set_value": extended_value(ext.upper_set_value),
            "pencil_eigenvalues": pencil.iter().map(|&l| finite_num(l)).collect::<Vec<_>>(),
            "k": k,
            "finite": ext.lower_set_value.is_finite(),
        }))
    }
}

fn definiteness_label(d: Definiteness) -> &'static str {
    match d {
        Definiteness::PositiveDefinite => "positive definite",
        Definiteness::PositiveSemidefiniteSingular => "positive semidefinite, singular",
        Definiteness::NotPsd => "indefinite",
    }
}

/// Smallest eigenvalue of `left - right`; nonnegative (up to tolerance) means
/// `right ⪯ left`.
fn domination_margin<T: Scalar>(
    left: &HermitianMatrix<T>,
    right: &HermitianMatrix<T>,
) -> Result<f64, Failure> {
    let diff = HermitianMatrix::symmetrize(left.matrix() - right.matrix());
    let eigs = eigvalsh(&diff).map_err(compute_error)?;
    Ok(eigs.first().copied().unwrap_or(0.0))
}

fn witnesses_json<T: Scalar>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    value: f64,
) -> Result<Value, Failure> {
    let (_, contained) = dist_to_contained_set(a, b).map_err(compute_error)?;
    let (_, containing) = dist_to_containing_set(a, b).map_err(compute_error)?;
    let b11 = leading_block(b, a.dim()).map_err(compute_error)?;
    let g11 = leading_block(&containing.optimum, a.dim()).map_err(compute_error)?;

    Ok(json!({
        "contained": {
            "matrix": matrix_value("h0", &contained.optimum),
            "achieved": finite_num(contained.achieved),
            "gap": finite_num((contained.achieved - value).abs()),
            "membership_min_eigenvalue": finite_num(domination_margin(&contained.optimum, &b11)?),
        },
        "containing": {
            "matrix": matrix_value("g0", &containing.optimum),
            "achieved": finite_num(containing.achieved),
            "gap": finite_num((containing.achieved - value).abs()),
            "membership_min_eigenvalue": finite_num(domination_margin(a, &g11)?),
        },
    }))
}
