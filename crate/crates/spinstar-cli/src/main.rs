//! Command-line surface for the spin-star entanglement toolkit: criterion
//! checks on supplied states, central-pair time series, k-scans, reference
//! figure data, and oracle verification runs.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 output
//! I/O failure.

mod commands;
mod config;
mod error;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::commands::{cmd_check, cmd_evolve, cmd_figures, cmd_scan};
use crate::config::OutputFormat;
use crate::verify::cmd_verify;

/// Two-qubit entanglement criterion and exact spin-star dynamics.
#[derive(Parser)]
#[command(name = "spinstar", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a two-qubit X state from its populations and coherence.
    Check(CheckArgs),
    /// Evolve the central pair of a spin star and write the time series.
    Evolve(RunArgs),
    /// Sweep the bath excitation number k and write concurrence rows.
    Scan(RunArgs),
    /// Cross-check the closed forms against brute-force oracles.
    Verify(VerifyArgs),
    /// Write the four reference figure data sets as CSV files.
    Figures(FiguresArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Populations and coherence: a b c d e (basis uu, ud, du, dd; real
    /// coherence c couples ud and du).
    #[arg(value_name = "VALUE", num_args = 0..=5, allow_negative_numbers = true)]
    values: Vec<f64>,
    /// Symmetric-state shortcut a b e (sets d = b and coherence c = b).
    #[arg(
        long,
        num_args = 3,
        value_names = ["A", "B", "E"],
        conflicts_with = "values",
        allow_negative_numbers = true
    )]
    sym: Option<Vec<f64>>,
}

#[derive(Args, Default)]
struct RunArgs {
    /// JSON config file; explicit flags override its values.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Number of bath spins N (default 100).
    #[arg(long, value_name = "N")]
    n_bath: Option<u32>,
    /// Number of bath spins initially up, 0..=N.
    #[arg(long)]
    k: Option<u32>,
    /// Inclusive k sweep A..B (scan only).
    #[arg(long, value_name = "A..B")]
    k_range: Option<String>,
    /// Central-pair projection m_s: -1, 0 or +1 (default +1).
    #[arg(long, allow_negative_numbers = true)]
    ms: Option<i32>,
    /// Coupling strength, > 0 (default 1).
    #[arg(long)]
    alpha: Option<f64>,
    /// Zeeman frequency (default 0; the reduced state does not depend on it).
    #[arg(long, allow_negative_numbers = true)]
    omega: Option<f64>,
    /// End of the grid in dimensionless alpha*t units (default 5).
    #[arg(long)]
    t_max: Option<f64>,
    /// Number of grid points (default 1000).
    #[arg(long)]
    points: Option<usize>,
    /// Output file (standard output when omitted).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Output format (default csv).
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Args)]
struct VerifyArgs {
    /// JSON config file; explicit flags override its values.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Number of bath spins N (default 6; the full tensor-product check
    /// runs only for N <= 10).
    #[arg(long, value_name = "N")]
    n_bath: Option<u32>,
    /// Coupling strength, > 0 (default 1).
    #[arg(long)]
    alpha: Option<f64>,
    /// Zeeman frequency (default 0).
    #[arg(long, allow_negative_numbers = true)]
    omega: Option<f64>,
    /// End of the grid in alpha*t units (default 5).
    #[arg(long)]
    t_max: Option<f64>,
    /// Number of grid points (default 50).
    #[arg(long)]
    points: Option<usize>,
    /// Shift the closed-form b entry by EPS so the harness demonstrably
    /// fails (self-test hook).
    #[arg(long, hide = true, value_name = "EPS", allow_negative_numbers = true)]
    perturb: Option<f64>,
}

#[derive(Args)]
struct FiguresArgs {
    /// JSON config file; explicit flags override its values.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Output directory for fig1.csv .. fig4.csv.
    #[arg(long, value_name = "DIR", default_value = "figures")]
    out: PathBuf,
    /// Coupling strength, > 0 (default 1).
    #[arg(long)]
    alpha: Option<f64>,
    /// Zeeman frequency (default 0).
    #[arg(long, allow_negative_numbers = true)]
    omega: Option<f64>,
    /// End of the grid in alpha*t units (default 5).
    #[arg(long)]
    t_max: Option<f64>,
    /// Number of grid points (default 1000).
    #[arg(long)]
    points: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(args) => cmd_check(&args),
        Command::Evolve(args) => cmd_evolve(&args),
        Command::Scan(args) => cmd_scan(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Figures(args) => cmd_figures(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}
