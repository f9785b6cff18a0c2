//! Command-line surface for the covariant Bell/CHSH analysis: parameter
//! sweeps, verification runs, critical-β computation, and axis optimization
//! with deterministic CSV/JSON output.

mod critical;
mod optimize;
mod sweep;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bellboost::BellKind;

/// Exit codes: 0 success, 2 config error, 3 compute/oracle failure,
/// 4 no crossing found.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Compute(String),
    NoCrossing(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Compute(_) => 3,
            CliError::NoCrossing(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Config(m) | CliError::Compute(m) | CliError::NoCrossing(m) => m,
        }
    }
}

impl From<bellboost::Error> for CliError {
    fn from(err: bellboost::Error) -> Self {
        match err {
            bellboost::Error::NoCrossing { .. } => CliError::NoCrossing(err.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Compute(format!("i/o error: {err}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObservableChoice {
    /// Covariant spin observable (axes Wigner-rotate with the frame).
    Covariant,
    /// Closed-form curve of the non-covariant Czachor-style observable.
    Czachor,
    /// Both columns.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DataFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridChoice {
    Default,
    Coarse,
}

/// Parse a Bell-state label (phi+, phi-, psi+, psi-).
fn parse_state(s: &str) -> Result<BellKind, String> {
    s.parse()
}

#[derive(Debug, Parser)]
#[command(
    name = "bellboost",
    version,
    about = "Covariant CHSH/Bell analysis for Lorentz-boosted spin-1/2 pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep CHSH values over a boost-speed grid and write CSV or JSON.
    Sweep(SweepArgs),
    /// Run the closed-form-vs-brute-force verification suite.
    Verify(VerifyArgs),
    /// Find the boost speed where the non-covariant curve reaches |C| = 2.
    CriticalBeta(CriticalArgs),
    /// Optimize CHSH axes numerically and compare with the Horodecki bound.
    Optimize(OptimizeArgs),
}

#[derive(Debug, clap::Args)]
pub struct SweepArgs {
    /// Smallest boost speed in the grid.
    #[arg(long, default_value_t = 0.0)]
    beta_min: f64,
    /// Largest boost speed in the grid (must stay below 1).
    #[arg(long, default_value_t = 0.99)]
    beta_max: f64,
    /// Number of grid points (at least 2).
    #[arg(long, default_value_t = 100)]
    beta_steps: usize,
    /// Particle rapidity δ; repeat the flag for several values.
    #[arg(long = "delta", num_args = 1.., default_values_t = [1.0])]
    deltas: Vec<f64>,
    /// Bell state to sweep.
    #[arg(long, value_parser = parse_state, default_value = "psi-")]
    state: BellKind,
    /// Which observables to evaluate.
    #[arg(long, value_enum, default_value_t = ObservableChoice::Both)]
    observable: ObservableChoice,
    /// Output file, written atomically.
    #[arg(long)]
    output: std::path::PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value_t = DataFormat::Csv)]
    format: DataFormat,
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Override every comparison tolerance with a single value.
    #[arg(long)]
    tolerance: Option<f64>,
    /// Grid density of the suite.
    #[arg(long, value_enum, default_value_t = GridChoice::Default)]
    grid: GridChoice,
    /// Print a human-readable table or a JSON report to stdout.
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    format: ReportFormat,
    /// Also write the JSON report to this file.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct CriticalArgs {
    /// Particle rapidity δ.
    #[arg(long)]
    delta: f64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    format: ReportFormat,
}

#[derive(Debug, clap::Args)]
pub struct OptimizeArgs {
    /// Bell state to optimize for.
    #[arg(long, value_parser = parse_state, default_value = "psi-")]
    state: BellKind,
    /// Wigner angle of the boosted frame, in radians.
    #[arg(long, default_value_t = 0.0)]
    omega: f64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    format: ReportFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(args) => sweep::run(&args),
        Command::Verify(args) => verify::run(&args),
        Command::CriticalBeta(args) => critical::run(&args),
        Command::Optimize(args) => optimize::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
