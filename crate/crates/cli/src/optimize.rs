//! The `optimize` subcommand: alternating axis maximization of the CHSH
//! value, checked against the Horodecki bound.

use serde::Serialize;

use bellboost::{
    boosted_bell_analytic, correlation_matrix_of, horodecki_max, optimize_axes, tol, ChshSetting,
};

use crate::{CliError, OptimizeArgs, ReportFormat};

#[derive(Debug, Serialize)]
struct OptimizeReport {
    state: String,
    omega: f64,
    a1: [f64; 3],
    a2: [f64; 3],
    b1: [f64; 3],
    b2: [f64; 3],
    value: f64,
    horodecki_bound: f64,
}

fn components(setting: &ChshSetting) -> [[f64; 3]; 4] {
    [setting.a1, setting.a2, setting.b1, setting.b2].map(|axis| {
        let v = axis.vector();
        [v[0], v[1], v[2]]
    })
}

pub fn run(args: &OptimizeArgs) -> Result<(), CliError> {
    if !args.omega.is_finite() {
        return Err(CliError::Config(format!(
            "--omega must be finite, got {}",
            args.omega
        )));
    }
    let (setting, value) = optimize_axes(args.state, args.omega).map_err(|e| match e {
        bellboost::Error::NoConvergence { .. } => {
            CliError::Compute(format!("optimizer did not converge: {e}"))
        }
        other => CliError::from(other),
    })?;
    let t = correlation_matrix_of(&boosted_bell_analytic(args.state, args.omega))?;
    let bound = horodecki_max(&t);

    let [a1, a2, b1, b2] = components(&setting);
    let report = OptimizeReport {
        state: args.state.to_string(),
        omega: args.omega,
        a1,
        a2,
        b1,
        b2,
        value,
        horodecki_bound: bound,
    };
    match args.format {
        ReportFormat::Table => {
            println!("state           = {}", report.state);
            println!("omega           = {:.6}", report.omega);
            for (name, v) in [("a1", a1), ("a2", a2), ("b1", b1), ("b2", b2)] {
                println!("{name}              = ({:+.6}, {:+.6}, {:+.6})", v[0], v[1], v[2]);
            }
            println!("chsh value      = {:.12}", report.value);
            println!("horodecki bound = {:.12}", report.horodecki_bound);
        }
        ReportFormat::Json => {
            let json = serde_json::to_string_pretty(&report)
                .map_err(|e| CliError::Compute(format!("json encoding failed: {e}")))?;
            println!("{json}");
        }
    }

    if (value - bound).abs() > tol::BOUND_MATCH {
        return Err(CliError::Compute(format!(
            "optimized value {value:.12} deviates from the Horodecki bound {bound:.12}"
        )));
    }
    Ok(())
}
