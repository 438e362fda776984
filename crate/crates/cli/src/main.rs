//! Command-line front end for distances on the positive definite cone.
//!
//! Subcommands: `dist` (one pair), `pairwise` (a collection), `check`
//! (seeded self-verification), `gen` (seeded test matrices). All randomness
//! flows through an explicit `--seed`; there is no ambient entropy and no
//! environment-variable configuration.

mod check;
mod dist;
mod gen;
mod io;
mod pairwise;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pdcone::scalar::ScalarField;

/// Exit code for verification runs that found violations.
pub const EXIT_VIOLATION: u8 = 1;
/// Exit code for unreadable, unparsable, or unwritable inputs and outputs.
pub const EXIT_PARSE: u8 = 2;
/// Exit code when the first argument is larger and `--allow-swap` is absent.
pub const EXIT_DIM_ORDER: u8 = 3;
/// Exit code when definiteness requirements fail and `--extended` is absent.
pub const EXIT_DEFINITENESS: u8 = 4;
/// Exit code for duplicate names in a collection.
pub const EXIT_DUPLICATE: u8 = 5;

/// A command failure carrying its exit code.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl ToString) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "pdcone",
    version,
    about = "Geometric distances between positive definite matrices of equal or different dimensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Real,
    Complex,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two matrices read from JSON or CSV files.
    Dist {
        /// Matrix file for the first argument (the smaller dimension).
        a: PathBuf,
        /// Matrix file for the second argument.
        b: PathBuf,
        /// Reorder the arguments when the first is larger, reporting the swap.
        #[arg(long)]
        allow_swap: bool,
        /// Include both optimal witnesses with membership residuals.
        #[arg(long)]
        witness: bool,
        /// Accept positive semidefinite input and report both set distances.
        #[arg(long)]
        extended: bool,
    },
    /// Distance matrix over a directory of matrix files or a JSON manifest.
    Pairwise {
        /// Directory containing matrix files, or a manifest listing paths.
        input: PathBuf,
        /// Output JSON report path.
        #[arg(long)]
        out: PathBuf,
        /// Optional CSV mirror of the value grid.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Accept positive semidefinite members.
        #[arg(long)]
        extended: bool,
    },
    /// Seeded self-verification of the closed forms against sampling.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances.
        #[arg(long, default_value_t = 20)]
        pairs: usize,
        /// Samples per constraint set per instance.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Largest matrix dimension drawn.
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        /// Evaluate the distance with the wrong eigenvalue branch; the run
        /// must then fail, proving the harness detects it.
        #[arg(long)]
        self_test: bool,
    },
    /// Write seeded random positive definite matrices as JSON files.
    Gen {
        /// Output directory (created if missing).
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// How many matrices to write.
        #[arg(long, default_value_t = 6)]
        count: usize,
        /// Comma-separated dimensions, cycled over the count.
        #[arg(long, default_value = "2,3,4", value_delimiter = ',')]
        dims: Vec<usize>,
        /// Condition number bound (>= 1).
        #[arg(long, default_value_t = 100.0)]
        cond: f64,
        #[arg(long, value_enum, default_value_t = FieldArg::Real)]
        field: FieldArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Dist {
            a,
            b,
            allow_swap,
            witness,
            extended,
        } => dist::run(&dist::DistArgs {
            a,
            b,
            allow_swap,
            witness,
            extended,
        }),
        Command::Pairwise {
            input,
            out,
            csv,
            extended,
        } => pairwise::run(&pairwise::PairwiseArgs {
            input,
            out,
            csv,
            extended,
        }),
        Command::Check {
            seed,
            pairs,
            samples,
            max_dim,
            self_test,
        } => check::run(&check::CheckArgs {
            seed,
            pairs,
            samples,
            max_dim,
            self_test,
        }),
        Command::Gen {
            out,
            seed,
            count,
            dims,
            cond,
            field,
        } => gen::run(&gen::GenArgs {
            out,
            seed,
            count,
            dims,
            cond,
            field: match field {
                FieldArg::Real => ScalarField::Real,
                FieldArg::Complex => ScalarField::Complex,
            },
        }),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
