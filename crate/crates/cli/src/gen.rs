//! `gen`: write seeded random positive definite matrices to disk.
//!
//! Each matrix is `s * Q diag(d) Q*` with a random orthonormal `Q`, `d`
//! log-uniform within the requested condition bound, and a log-uniform
//! overall scale `s` in `[0.1, 10]`. Files are reproduced byte-for-byte by
//! the same seed.

use std::fs;
use std::path::PathBuf;

use pdcone::oracle::{random_pd, SeededRng};
use pdcone::scalar::{Complex64, ScalarField};

use crate::io::{matrix_value, to_json_string};
use crate::{Failure, EXIT_PARSE};

pub struct GenArgs {
    pub out: PathBuf,
    pub seed: u64,
    pub count: usize,
    pub dims: Vec<usize>,
    pub cond: f64,
    pub field: ScalarField,
}

pub fn run(args: &GenArgs) -> Result<u8, Failure> {
    if args.dims.is_empty() || args.dims.contains(&0) {
        return Err(Failure::new(EXIT_PARSE, "--dims must list dimensions >= 1"));
    }
    if !(args.cond >= 1.0) {
        return Err(Failure::new(EXIT_PARSE, "--cond must be >= 1"));
    }
    fs::create_dir_all(&args.out).map_err(|e| {
        Failure::new(
            EXIT_PARSE,
            format!("cannot create {}: {e}", args.out.display()),
        )
    })?;

    let root = SeededRng::new(args.seed);
    for index in 0..args.count {
        let mut stream = root.derive(index as u64);
        let dim = args.dims[index % args.dims.len()];
        let scale = stream.log_uniform(0.1, 10.0);
        let name = format!("m{index:03}_d{dim}");
        let text = match args.field {
            ScalarField::Real => {
                let h = random_pd::<f64>(dim, args.cond, &mut stream).scaled(scale);
                to_json_string(&matrix_value(&name, &h))
            }
            ScalarField::Complex => {
                let h = random_pd::<Complex64>(dim, args.cond, &mut stream).scaled(scale);
                to_json_string(&matrix_value(&name, &h))
            }
        };
        let path = args.out.join(format!("{name}.json"));
        fs::write(&path, text).map_err(|e| {
            Failure::new(EXIT_PARSE, format!("cannot write {}: {e}", path.display()))
        })?;
        println!("{}", path.display());
    }
    Ok(0)
}
