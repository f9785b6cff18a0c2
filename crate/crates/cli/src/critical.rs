//! The `critical-beta` subcommand: bisection for the boost speed where the
//! non-covariant CHSH curve reaches |C| = 2.

use serde::Serialize;

use bellboost::{critical_beta, czachor_chsh};

use crate::{CliError, CriticalArgs, ReportFormat};

#[derive(Debug, Serialize)]
struct CriticalReport {
    delta: f64,
    beta_c: f64,
    chsh_at_beta_c: f64,
    residual: f64,
}

pub fn run(args: &CriticalArgs) -> Result<(), CliError> {
    if args.delta < 0.0 || !args.delta.is_finite() {
        return Err(CliError::Config(format!(
            "--delta must be finite and nonnegative, got {}",
            args.delta
        )));
    }
    let beta_c = critical_beta(args.delta)?;
    let chsh = czachor_chsh(beta_c, args.delta)?;
    let report = CriticalReport {
        delta: args.delta,
        beta_c,
        chsh_at_beta_c: chsh,
        residual: chsh.abs() - 2.0,
    };
    match args.format {
        ReportFormat::Table => {
            println!("beta_c   = {:.10}", report.beta_c);
            println!("chsh     = {:.12}", report.chsh_at_beta_c);
            println!("residual = {:+.3e}  (|C(beta_c, delta)| - 2)", report.residual);
        }
        ReportFormat::Json => {
            let json = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Compute(format!("json encoding failed: {e}")))?;
            println!("{json}");
        }
    }
    Ok(())
}
