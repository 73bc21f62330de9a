//! `gonal`: construct graphs, compute gonality and check closed-form claims.

mod commands;
mod report;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Failure classes, each with its own exit status.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Precondition(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Precondition(_) => 2,
        }
    }
}

impl From<gonal::Error> for CliError {
    fn from(err: gonal::Error) -> Self {
        match err {
            gonal::Error::Parse { .. } => CliError::Usage(err.to_string()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Exit status for a completed run.
pub const EXIT_OK: u8 = 0;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_REFUTED: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "gonal", version, about = "Divisor theory and gonality on finite graphs")]
pub struct Cli {
    /// Emit the run report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Add wall-clock time to the report (outside the payload).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a graph family member and print it in the graph text format.
    Construct {
        /// fan, grid, cycle, cycle-chain, universal-path, genus-witness,
        /// grid-embedding or bridge-split.
        family: String,
        /// Family parameters (a file path for bridge-split).
        params: Vec<String>,
        /// Output file; for grid-embedding a prefix for the three files.
        #[arg(long)]
        out: Option<String>,
    },
    /// Compute gonality with a certificate.
    Gonality {
        file: String,
        /// Largest degree searched; defaults to the vertex count.
        #[arg(long)]
        budget: Option<usize>,
        /// Vertex every candidate divisor must cover.
        #[arg(long, default_value_t = 0)]
        base_vertex: usize,
    },
    /// Compare a closed-form claim against exhaustive computation.
    Verify {
        /// fan-formula, chain-formula, universal-formula, riemann-roch,
        /// delta-invariant, tw-lower-bound, bridge-preserves,
        /// witness-genus-gonality or embedding.
        claim: String,
        params: Vec<String>,
        /// Seed for sampled instances.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Instance-size cap from `GONAL_MAX_N`.
pub fn max_n() -> CliResult<usize> {
    match std::env::var("GONAL_MAX_N") {
        Ok(raw) => raw
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("GONAL_MAX_N must be a non-negative integer, got {raw:?}"))),
        Err(_) => Ok(40),
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 1 } else { 0 });
        }
    };
    let start = std::time::Instant::now();
    let echo = args[1..].to_vec();
    match commands::run(&cli, echo) {
        Ok((Some(mut report), code)) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(code)
        }
        Ok((None, code)) => ExitCode::from(code),
        Err(err) => {
            let (CliError::Usage(msg) | CliError::Precondition(msg)) = &err;
            eprintln!("error: {msg}");
            ExitCode::from(err.code())
        }
    }
}
