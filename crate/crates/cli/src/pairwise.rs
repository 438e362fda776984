//! `pairwise`: distance matrix over a named collection of matrices of
//! possibly different dimensions.
//!
//! Entry `(i, j)` holds the cross-dimensional distance oriented small-to-
//! large: when `dim_i <= dim_j` the pair is used as given (`forward`),
//! otherwise the arguments are exchanged and the entry is flagged
//! `mirrored`. Equal-dimension entries are not symmetrized; `(i, j)` and
//! `(j, i)` are both reported because the two orders genuinely differ.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::{json, Value};

use pdcone::geometry::{delta2_plus, delta2_plus_extended, ExtendedReal};
use pdcone::linalg::Definiteness;

use crate::io::{
    extended_cell, extended_value, promote_pair, read_matrix, to_json_string, MatrixPair,
    NamedMatrix,
};
use crate::{Failure, EXIT_DEFINITENESS, EXIT_DUPLICATE, EXIT_PARSE};

pub struct PairwiseArgs {
    pub input: PathBuf,
    pub out: PathBuf,
    pub csv: Option<PathBuf>,
    pub extended: bool,
}

struct Entry {
    row: usize,
    col: usize,
    value: ExtendedReal,
    mirrored: bool,
}

pub fn run(args: &PairwiseArgs) -> Result<u8, Failure> {
    let matrices = load_collection(&args.input)?;
    let report = compute(&matrices, args.extended)?;
    fs::write(&args.out, to_json_string(&report.json))
        .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot write {}: {e}", args.out.display())))?;
    if let Some(csv_path) = &args.csv {
        fs::write(csv_path, report.csv).map_err(|e| {
            Failure::new(EXIT_PARSE, format!("cannot write {}: {e}", csv_path.display()))
        })?;
    }
    Ok(0)
}

fn load_collection(input: &Path) -> Result<Vec<NamedMatrix>, Failure> {
    let mut paths: Vec<PathBuf> = Vec::new();
    if input.is_dir() {
        let entries = fs::read_dir(input)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", input.display())))?;
        for entry in entries {
            let path = entry
                .map_err(|e| Failure::new(EXIT_PARSE, e))?
                .path();
            match path.extension().and_then(|e| e.to_str()) {
                Some("json") | Some("csv") => paths.push(path),
                _ => {}
            }
        }
        paths.sort();
    } else {
        // A manifest: JSON array of file paths, relative to the manifest.
        let text = fs::read_to_string(input)
            .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", input.display())))?;
        let listed: Vec<String> = serde_json::from_str(&text).map_err(|e| {
            Failure::new(
                EXIT_PARSE,
                format!("{}: manifest must be a JSON array of paths: {e}", input.display()),
            )
        })?;
        let base = input.parent().unwrap_or(Path::new("."));
        for item in listed {
            let p = PathBuf::from(&item);
            paths.push(if p.is_absolute() { p } else { base.join(p) });
        }
    }

    let mut matrices = Vec::with_capacity(paths.len());
    for path in &paths {
        matrices.push(read_matrix(path).map_err(|e| Failure::new(EXIT_PARSE, e))?);
    }
    if matrices.len() < 2 {
        return Err(Failure::new(
            EXIT_PARSE,
            format!("need at least two matrices, found {}", matrices.len()),
        ));
    }

    let mut seen = BTreeSet::new();
    for m in &matrices {
        if !seen.insert(m.name.clone()) {
            return Err(Failure::new(
                EXIT_DUPLICATE,
                format!("duplicate matrix name {:?}", m.name),
            ));
        }
    }
    matrices.sort_by(|x, y| x.name.cmp(&y.name));
    Ok(matrices)
}

struct Report {
    json: Value,
    csv: String,
}

fn compute(matrices: &[NamedMatrix], extended: bool) -> Result<Report, Failure> {
    for m in matrices {
        let class = m
            .matrix
            .classify()
            .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", m.name)))?;
        let acceptable = if extended {
            class != Definiteness::NotPsd
        } else {
            class == Definiteness::PositiveDefinite
        };
        if !acceptable {
            return Err(Failure::new(
                EXIT_DEFINITENESS,
                format!(
                    "matrix {:?} is not positive {}",
                    m.name,
                    if extended { "semidefinite" } else { "definite (pass --extended for semidefinite semantics)" }
                ),
            ));
        }
    }

    let n = matrices.len();
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .collect();
    let entries: Vec<Entry> = cells
        .par_iter()
        .map(|&(i, j)| entry(matrices, i, j, extended))
        .collect::<Result<_, Failure>>()?;

    let names: Vec<&str> = matrices.iter().map(|m| m.name.as_str()).collect();
    let dims: Vec<usize> = matrices.iter().map(|m| m.matrix.dim()).collect();
    let fields: Vec<&str> = matrices.iter().map(|m| m.matrix.field().as_str()).collect();

    let json_entries: Vec<Value> = entries
        .iter()
        .map(|e| {
            json!({
                "i": e.row,
                "j": e.col,
                "value": extended_value(e.value),
                "orientation": if e.mirrored { "mirrored" } else { "forward" },
                "finite": e.value.is_finite(),
            })
        })
        .collect();
    let json = json!({
        "names": names,
        "dims": dims,
        "fields": fields,
        "entries": json_entries,
    });

    let mut csv = String::from("name");
    for name in &names {
        csv.push(',');
        csv.push_str(name);
    }
    csv.push('\n');
    for i in 0..n {
        csv.push_str(names[i]);
        for e in entries.iter().filter(|e| e.row == i) {
            csv.push(',');
            csv.push_str(&extended_cell(e.value));
        }
        csv.push('\n');
    }

    Ok(Report { json, csv })
}

fn entry(matrices: &[NamedMatrix], i: usize, j: usize, extended: bool) -> Result<Entry, Failure> {
    if i == j {
        return Ok(Entry {
            row: i,
            col: j,
            value: ExtendedReal::Finite(0.0),
            mirrored: false,
        });
    }
    let mirrored = matrices[i].matrix.dim() > matrices[j].matrix.dim();
    let (small, large) = if mirrored {
        (&matrices[j], &matrices[i])
    } else {
        (&matrices[i], &matrices[j])
    };
    let fail = |e: pdcone::Error| {
        Failure::new(
            EXIT_PARSE,
            format!("distance ({}, {}) failed: {e}", small.name, large.name),
        )
    };
    let value = match promote_pair(&small.matrix, &large.matrix) {
        MatrixPair::Real(a, b) => {
            if extended {
                delta2_plus_extended(&a, &b).map_err(fail)?.lower_set_value
            } else {
                delta2_plus(&a, &b).map_err(fail)?.value
            }
        }
        MatrixPair::Complex(a, b) => {
            if extended {
                delta2_plus_extended(&a, &b).map_err(fail)?.lower_set_value
            } else {
                delta2_plus(&a, &b).map_err(fail)?.value
            }
        }
    };
    Ok(Entry {
        row: i,
        col: j,
        value,
        mirrored,
    })
}
