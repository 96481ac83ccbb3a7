//! Command-line front end: exact analysis, normalization, and realization of
//! Lie algebras of rational vector fields, with JSON reports on stdout.
//!
//! Exit codes: 0 success, 2 input error, 3 internal identity violation.

use clap::{Parser, Subcommand, ValueEnum};
use lievf::Error;
use lievf_cli::catalog;
use lievf_cli::input::AlgebraInput;
use lievf_cli::pipeline::{self, ModeChoice};
use lievf_cli::report::{self, ErrorBody, ErrorReport};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "lievf",
    version,
    about = "Exact analysis of Lie algebras of rational vector fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ModeArg {
    Auto,
    Curve,
    Affine,
}

#[derive(Subcommand)]
enum Command {
    /// Transitivity, stabilizer dimensions, effectiveness, and the Morozov
    /// classification of an input algebra
    Analyze {
        path: PathBuf,
        /// seed for the generic-point search (default: LIEVF_SEED or 0)
        #[arg(long)]
        seed: Option<u64>,
        /// include wall-clock stage timings in the report
        #[arg(long)]
        timings: bool,
    },
    /// Analysis plus the curve or affine normalization map
    Normalize {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        timings: bool,
    },
    /// Truncated realization of an abstract pair as vector-field jets
    Realize {
        path: PathBuf,
        /// jet truncation order (brackets are checked through order - 1)
        #[arg(long)]
        order: u32,
    },
    /// List the built-in example corpus, optionally running all entries
    /// against their expected classifications
    Catalog {
        #[arg(long)]
        run_all: bool,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn resolve_seed(cli_seed: Option<u64>) -> u64 {
    cli_seed
        .or_else(|| {
            std::env::var("LIEVF_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(0)
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::IdentityViolation(_) | Error::InconsistentJetSystem { .. } => 3,
        _ => 2,
    }
}

fn fail(err: Error) -> ! {
    let code = exit_code_for(&err);
    let report = ErrorReport {
        error: ErrorBody {
            code,
            message: err.to_string(),
        },
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("error report serializes")
    );
    std::process::exit(code);
}

fn read_input(path: &PathBuf) -> AlgebraInput {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => fail(Error::Invalid(format!(
            "cannot read {}: {e}",
            path.display()
        ))),
    };
    match AlgebraInput::from_json(&text) {
        Ok(i) => i,
        Err(e) => fail(e),
    }
}

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

#[derive(Serialize)]
struct RealizeOutput {
    name: Option<String>,
    realization: report::RealizationReport,
}

fn main() {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            path,
            seed,
            timings,
        } => {
            let input = read_input(&path);
            let seed = resolve_seed(seed);
            match pipeline::analyze(&input, seed, timings) {
                Ok(analysis) => emit(&analysis.report),
                Err(e) => fail(e),
            }
        }
        Command::Normalize {
            path,
            mode,
            seed,
            timings,
        } => {
            let input = read_input(&path);
            let seed = resolve_seed(seed);
            let mode = match mode {
                ModeArg::Auto => ModeChoice::Auto,
                ModeArg::Curve => ModeChoice::Curve,
                ModeArg::Affine => ModeChoice::Affine,
            };
            match pipeline::normalize(&input, mode, seed, timings) {
                Ok(analysis) => emit(&analysis.report),
                Err(e) => fail(e),
            }
        }
        Command::Realize { path, order } => {
            let input = read_input(&path);
            match pipeline::realize(&input, order) {
                Ok(realization) => emit(&RealizeOutput {
                    name: input.meta.name.clone(),
                    realization,
                }),
                Err(e) => fail(e),
            }
        }
        Command::Catalog { run_all, seed } => {
            if !run_all {
                for (name, _) in catalog::ENTRIES {
                    println!("{name}");
                }
                return;
            }
            let seed = resolve_seed(seed);
            match catalog::run_all(seed) {
                Ok(outcomes) => {
                    let mut failed = false;
                    for o in &outcomes {
                        if o.passed() {
                            println!("PASS {}", o.name);
                        } else {
                            failed = true;
                            println!("FAIL {} ({})", o.name, o.mismatches.join("; "));
                        }
                    }
                    if failed {
                        std::process::exit(3);
                    }
                }
                Err(e) => fail(e),
            }
        }
    }
}
