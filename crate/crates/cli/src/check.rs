//! `check`: seeded self-verification of the closed-form distances.
//!
//! For each seeded random instance the harness certifies the infimum by
//! sampling both constraint sets, re-evaluates the distance at the
//! constructed optima, and runs the structural checkers (congruence and
//! inversion invariance, interlacing, majorization, the squared split of the
//! equal-dimension distance, and the block-elimination congruence). Exit
//! code 0 means zero violations; any violation exits 1 and serializes the
//! offending instance for replay.
//!
//! `--self-test` deliberately evaluates the distance with the opposite
//! eigenvalue branch (contributions from eigenvalues below one instead of
//! above) and feeds that value to the same machinery; the run must fail,
//! demonstrating that the harness can tell the two readings apart.

use rayon::prelude::*;
use serde_json::{json, Value};

use pdcone::geometry::{delta2, delta2_plus, log_contribution, pythagorean_split, LogBranch};
use pdcone::linalg::{HermitianMatrix, Matrix};
use pdcone::oracle::{
    check_congruence_invariance, check_interlacing, check_majorization, check_schur_congruence,
    normal_matrix, random_conditioned, random_pd, verify_infimum_against, SeededRng,
};
use pdcone::tol;

use crate::io::{matrix_value, to_json_string};
use crate::{Failure, EXIT_PARSE, EXIT_VIOLATION};

pub struct CheckArgs {
    pub seed: u64,
    pub pairs: usize,
    pub samples: usize,
    pub max_dim: usize,
    pub self_test: bool,
}

const CHECKS: &[&str] = &[
    "infimum",
    "congruence_invariance",
    "inversion_invariance",
    "interlacing",
    "majorization",
    "pythagorean",
    "schur_congruence",
];

#[derive(Default)]
struct PairOutcome {
    runs: Vec<(&'static str, usize)>,
    failures: Vec<Value>,
}

pub fn run(args: &CheckArgs) -> Result<u8, Failure> {
    if args.max_dim < 2 {
        return Err(Failure::new(EXIT_PARSE, "--max-dim must be at least 2"));
    }
    let root = SeededRng::new(args.seed);
    let outcomes: Vec<PairOutcome> = (0..args.pairs)
        .into_par_iter()
        .map(|index| check_pair(&root, index, args))
        .collect::<Result<_, Failure>>()?;

    let mut per_check: Vec<(&str, usize, usize)> =
        CHECKS.iter().map(|&name| (name, 0usize, 0usize)).collect();
    let mut failures = Vec::new();
    for outcome in &outcomes {
        for &(name, runs) in &outcome.runs {
            let slot = per_check
                .iter_mut()
                .find(|(n, _, _)| *n == name)
                .expect("known check name");
            slot.1 += runs;
        }
        for failure in &outcome.failures {
            let name = failure["check"].as_str().unwrap_or_default().to_string();
            if let Some(slot) = per_check.iter_mut().find(|(n, _, _)| *n == name) {
                slot.2 += 1;
            }
            failures.push(failure.clone());
        }
    }
    let total_violations = failures.len();

    let checks_json: Value = Value::Object(
        per_check
            .iter()
            .map(|&(name, runs, violations)| {
                (
                    name.to_string(),
                    json!({"runs": runs, "violations": violations}),
                )
            })
            .collect(),
    );
    let report = json!({
        "seed": args.seed,
        "pairs": args.pairs,
        "samples": args.samples,
        "max_dim": args.max_dim,
        "self_test": args.self_test,
        "rng": SeededRng::ALGORITHM,
        "checks": checks_json,
        "violations": total_violations,
        "failures": failures,
    });
    print!("{}", to_json_string(&report));
    Ok(if total_violations == 0 { 0 } else { EXIT_VIOLATION })
}

fn compute_failure(e: pdcone::Error) -> Failure {
    Failure::new(EXIT_PARSE, format!("check computation failed: {e}"))
}

fn check_pair(root: &SeededRng, index: usize, args: &CheckArgs) -> Result<PairOutcome, Failure> {
    let mut rng = root.derive(index as u64);
    let m = rng.int_range(2, args.max_dim);
    let n = rng.int_range(m, args.max_dim);
    let cond_a = rng.log_uniform(1.0, 1e4);
    let cond_b = rng.log_uniform(1.0, 1e4);
    let a = random_pd::<f64>(m, cond_a, &mut rng);
    let b = random_pd::<f64>(n, cond_b, &mut rng);
    let a2 = random_pd::<f64>(m, cond_a, &mut rng);

    let mut outcome = PairOutcome::default();
    let fail_with = |check: &'static str, detail: String| {
        json!({
            "pair": index,
            "check": check,
            "detail": detail,
            "m": m,
            "n": n,
            "a": matrix_value("a", &a),
            "b": matrix_value("b", &b),
        })
    };

    // Infimum certification from both sides, against the claimed value.
    let honest = delta2_plus(&a, &b).map_err(compute_failure)?;
    let branch = if args.self_test {
        LogBranch::BelowOne
    } else {
        LogBranch::AboveOne
    };
    let claimed = log_contribution(&honest.pencil_eigenvalues, branch).0;
    let (minus, plus) =
        verify_infimum_against(&a, &b, claimed, &mut rng, args.samples, tol::WITNESS)
            .map_err(compute_failure)?;
    outcome.runs.push(("infimum", 2 * args.samples + 2));
    for (side, report) in [("contained", &minus), ("containing", &plus)] {
        if report.violations > 0 {
            outcome.failures.push(fail_with(
                "infimum",
                format!(
                    "{side} side: {} of {} samples undercut the value {claimed:.17e} (best {:?})",
                    report.violations, report.sample_count, report.best_sampled
                ),
            ));
        }
        if report.witness_gap > tol::WITNESS * (1.0 + claimed) {
            outcome.failures.push(fail_with(
                "infimum",
                format!(
                    "{side} optimum attains {:.17e}, claimed value {claimed:.17e}",
                    claimed + report.witness_gap
                ),
            ));
        }
    }

    // Congruence invariance on an equal-dimension pair.
    let x: Matrix<f64> = random_conditioned(m, 1e3, &mut rng);
    let ok = check_congruence_invariance(&a, &a2, &x, 1e-8).map_err(compute_failure)?;
    outcome.runs.push(("congruence_invariance", 1));
    if !ok {
        outcome
            .failures
            .push(fail_with("congruence_invariance", "distance moved under congruence".into()));
    }

    // Inversion invariance.
    let d0 = delta2(&a, &a2).map_err(compute_failure)?;
    let d1 = delta2(
        &a.inverse().map_err(compute_failure)?,
        &a2.inverse().map_err(compute_failure)?,
    )
    .map_err(compute_failure)?;
    outcome.runs.push(("inversion_invariance", 1));
    if (d0 - d1).abs() > 1e-9 * (1.0 + d0) {
        outcome.failures.push(fail_with(
            "inversion_invariance",
            format!("d(A,B) = {d0:.17e} but d(inv A, inv B) = {d1:.17e}"),
        ));
    }

    // Interlacing for every split of B.
    outcome.runs.push(("interlacing", n));
    for split in 1..=n {
        if !check_interlacing(&b, split, tol::ORDER).map_err(compute_failure)? {
            outcome
                .failures
                .push(fail_with("interlacing", format!("split {split}")));
        }
    }

    // Majorization on a constructed dominated pair.
    let w: Matrix<f64> = normal_matrix(m, m, &mut rng);
    let dominated = HermitianMatrix::symmetrize(a.matrix() + &(&w * &w.adjoint()));
    outcome.runs.push(("majorization", 1));
    if !check_majorization(&a, &dominated, tol::ORDER).map_err(compute_failure)? {
        outcome
            .failures
            .push(fail_with("majorization", "eigenvalue comparison failed".into()));
    }

    // Squared split of the equal-dimension distance.
    let split = pythagorean_split(&a, &a2).map_err(compute_failure)?;
    let lhs = split.forward * split.forward + split.backward * split.backward;
    let rhs = split.total * split.total;
    let scale = f64::max(rhs, f64::max(lhs, 1e-30));
    outcome.runs.push(("pythagorean", 1));
    if (lhs - rhs).abs() > 1e-10 * scale {
        outcome.failures.push(fail_with(
            "pythagorean",
            format!("forward² + backward² = {lhs:.17e} vs total² = {rhs:.17e}"),
        ));
    }

    // Block-elimination congruence on a random split.
    if n >= 2 {
        let split_at = rng.int_range(1, n - 1);
        outcome.runs.push(("schur_congruence", 1));
        if !check_schur_congruence(&b, split_at, 1e-12).map_err(compute_failure)? {
            outcome
                .failures
                .push(fail_with("schur_congruence", format!("split {split_at}")));
        }
    }

    Ok(outcome)
}
