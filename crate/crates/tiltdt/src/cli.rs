//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a comparison or self-duality check failed,
//! 2 non-discrete charge, 3 step or node budget exhausted, 4 invalid input.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tiltdt_core::{
    check_independence, dt_invariant, enumerate_mgs, run_mutation_method, self_duality_check,
    CentralCharge, ChargeStatus, Error, Quiver, RunStatus, DEFAULT_BUDGET,
};

use crate::formats::{self, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_NONDISCRETE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INVALID: i32 = 4;

pub const DEFAULT_DEGREE: u32 = 8;
pub const DEFAULT_SEED: u64 = 2013;

#[derive(Debug, Parser)]
#[command(
    name = "tiltdt",
    version,
    about = "Maximal green sequences and refined DT invariants of quivers"
)]
pub struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mutate a quiver at a sequence of vertices and print the result.
    Mutate {
        quiver: PathBuf,
        vertices: Vec<usize>,
    },
    /// Run the mutation method for one central charge.
    Run {
        quiver: PathBuf,
        charge: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Compute the refined DT invariant for one central charge.
    Dt {
        quiver: PathBuf,
        charge: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Compare DT invariants across central charges.
    Check {
        quiver: PathBuf,
        charges: Vec<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        degree: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Additional seeded random integer charges.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// List maximal green sequences by depth-first search.
    Enumerate {
        quiver: PathBuf,
        #[arg(long, default_value_t = 20)]
        max_len: usize,
        #[arg(long, default_value_t = 100_000)]
        node_budget: usize,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Core(Error),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::NondiscreteCharge { .. }) => EXIT_NONDISCRETE,
            CliError::Core(Error::InfiniteSpectrum { .. }) => EXIT_BUDGET,
            CliError::Core(Error::SelfDualityViolated) => EXIT_CHECK_FAILED,
            _ => EXIT_INVALID,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BadIndex { index, n } => CliError::Invalid(format!(
                "vertex out of range: {index} (quiver has {n} vertices)"
            )),
            e => CliError::Core(e),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn load_quiver(path: &Path) -> Result<Quiver, CliError> {
    formats::parse_quiver(&read(path)?).map_err(|source| CliError::Format {
        path: path.display().to_string(),
        source,
    })
}

fn load_charge(path: &Path, q: &Quiver) -> Result<CentralCharge, CliError> {
    formats::parse_charge_for(&read(path)?, q).map_err(|source| CliError::Format {
        path: path.display().to_string(),
        source,
    })
}

/// Integer charges with `re` in `[-10, 10]` and `im` in `[1, 10]`.
pub fn random_charges(n: usize, count: usize, seed: u64) -> Vec<CentralCharge> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let z: Vec<(i64, i64)> = (0..n)
                .map(|_| (rng.gen_range(-10..=10), rng.gen_range(1..=10)))
                .collect();
            CentralCharge::from_ints(&z).expect("positive imaginary parts")
        })
        .collect()
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Mutate { quiver, vertices } => {
            let mut q = load_quiver(quiver)?;
            for &k in vertices {
                q = q.mutate(k)?;
            }
            writeln!(out, "{}", formats::quiver_to_json(&q))?;
            Ok(EXIT_OK)
        }
        Command::Run {
            quiver,
            charge,
            budget,
        } => {
            let q = load_quiver(quiver)?;
            let z = load_charge(charge, &q)?;
            let run = run_mutation_method(&q, &z, *budget)?;
            let pi = match run.status {
                RunStatus::MaximalReached => Some(self_duality_check(&run)?),
                RunStatus::BudgetExceeded => None,
            };
            if cli.json {
                writeln!(out, "{}", formats::transcript_to_json(&run, pi.as_ref()))?;
            } else {
                writeln!(
                    out,
                    "{:>5}  {:>6}  {:<20}  phase",
                    "step", "vertex", "class"
                )?;
                for (i, s) in run.steps.iter().enumerate() {
                    writeln!(
                        out,
                        "{:>5}  {:>6}  {:<20}  {:.6}",
                        i + 1,
                        s.vertex,
                        s.stable_class.to_string(),
                        s.phase_display
                    )?;
                }
                match &pi {
                    Some(pi) => writeln!(
                        out,
                        "maximal green sequence of length {}; final permutation {pi}",
                        run.len()
                    )?,
                    None => writeln!(out, "budget of {budget} steps exceeded")?,
                }
            }
            Ok(match run.status {
                RunStatus::MaximalReached => EXIT_OK,
                RunStatus::BudgetExceeded => EXIT_BUDGET,
            })
        }
        Command::Dt {
            quiver,
            charge,
            degree,
            budget,
        } => {
            let q = load_quiver(quiver)?;
            let z = load_charge(charge, &q)?;
            let s = dt_invariant(&q, &z, *degree, *budget)?;
            if cli.json {
                writeln!(out, "{}", formats::series_to_json(&s))?;
            } else {
                writeln!(out, "{s}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            quiver,
            charges,
            degree,
            budget,
            random,
            seed,
        } => {
            let q = load_quiver(quiver)?;
            let mut zs = charges
                .iter()
                .map(|p| load_charge(p, &q))
                .collect::<Result<Vec<_>, _>>()?;
            zs.extend(random_charges(q.n(), *random, *seed));
            if zs.len() < 2 {
                return Err(CliError::Invalid("check needs at least two charges".into()));
            }
            let report = check_independence(&q, &zs, *degree, *budget)?;
            if cli.json {
                writeln!(out, "{}", formats::report_to_json(&report))?;
            } else {
                for r in &report.results {
                    let status = match r.status {
                        ChargeStatus::Ok => "ok",
                        ChargeStatus::Nondiscrete => "nondiscrete",
                        ChargeStatus::Infinite => "infinite",
                    };
                    writeln!(out, "charge {}: {status}", r.charge_index)?;
                }
                for c in &report.comparisons {
                    writeln!(out, "charges {} and {}: equal: {}", c.i, c.j, c.equal)?;
                }
            }
            Ok(if report.all_equal() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Enumerate {
            quiver,
            max_len,
            node_budget,
        } => {
            let q = load_quiver(quiver)?;
            let e = enumerate_mgs(&q, *max_len, *node_budget)?;
            if cli.json {
                let doc = serde_json::json!({
                    "sequences": e.sequences,
                    "complete": e.complete,
                });
                writeln!(out, "{doc}")?;
            } else {
                for s in &e.sequences {
                    let line: Vec<String> = s.iter().map(|k| k.to_string()).collect();
                    writeln!(out, "{}", line.join(" "))?;
                }
                if !e.complete {
                    writeln!(out, "search stopped after {} nodes", e.nodes)?;
                }
            }
            Ok(if e.complete { EXIT_OK } else { EXIT_BUDGET })
        }
    }
}
