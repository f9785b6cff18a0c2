//! The `sweep` subcommand: one row per (β, δ) grid point with the covariant
//! and/or Czachor CHSH values, written atomically as CSV or JSON.

use std::io::Write;

use serde::Serialize;

use bellboost::{canonical_axes, chsh_value, czachor_chsh, wigner_angle_closed_form, BellKind};

use crate::{CliError, DataFormat, ObservableChoice, SweepArgs};

pub const CSV_HEADER: &str = "beta,alpha,delta,omega_rad,chsh_covariant,chsh_czachor";

#[derive(Debug, Serialize)]
struct SweepRow {
    beta: f64,
    alpha: f64,
    delta: f64,
    omega_rad: f64,
    chsh_covariant: Option<f64>,
    chsh_czachor: Option<f64>,
}

/// Render with 17 significant digits so the double round-trips exactly.
fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn validate(args: &SweepArgs) -> Result<(), CliError> {
    if !(0.0..1.0).contains(&args.beta_min) || !args.beta_max.is_finite() {
        return Err(CliError::Config(format!(
            "--beta-min must lie in [0, 1), got {}",
            args.beta_min
        )));
    }
    if args.beta_max >= 1.0 || args.beta_max <= args.beta_min {
        return Err(CliError::Config(format!(
            "need 0 <= beta-min < beta-max < 1, got [{}, {}]",
            args.beta_min, args.beta_max
        )));
    }
    if args.beta_steps < 2 {
        return Err(CliError::Config(format!(
            "--beta-steps must be at least 2, got {}",
            args.beta_steps
        )));
    }
    if args.deltas.is_empty() {
        return Err(CliError::Config("need at least one --delta".into()));
    }
    for &d in &args.deltas {
        if d < 0.0 || !d.is_finite() {
            return Err(CliError::Config(format!(
                "--delta must be finite and nonnegative, got {d}"
            )));
        }
    }
    if matches!(
        args.observable,
        ObservableChoice::Czachor | ObservableChoice::Both
    ) && args.state != BellKind::PsiMinus
    {
        return Err(CliError::Config(format!(
            "the Czachor closed form is defined for the singlet psi- only, not {}",
            args.state
        )));
    }
    Ok(())
}

fn compute_rows(args: &SweepArgs) -> Result<Vec<SweepRow>, CliError> {
    let want_covariant = matches!(
        args.observable,
        ObservableChoice::Covariant | ObservableChoice::Both
    );
    let want_czachor = matches!(
        args.observable,
        ObservableChoice::Czachor | ObservableChoice::Both
    );
    let mut deltas = args.deltas.clone();
    deltas.sort_by(f64::total_cmp);

    let axes = canonical_axes(args.state);
    let mut rows = Vec::with_capacity(args.beta_steps * deltas.len());
    for i in 0..args.beta_steps {
        let beta = args.beta_min
            + (args.beta_max - args.beta_min) * (i as f64) / ((args.beta_steps - 1) as f64);
        let alpha = beta.atanh();
        for &delta in &deltas {
            let omega = wigner_angle_closed_form(alpha, delta)?;
            let chsh_covariant = if want_covariant {
                Some(chsh_value(args.state, &axes, omega)?.value)
            } else {
                None
            };
            let chsh_czachor = if want_czachor {
                Some(czachor_chsh(beta, delta)?)
            } else {
                None
            };
            rows.push(SweepRow {
                beta,
                alpha,
                delta,
                omega_rad: omega,
                chsh_covariant,
                chsh_czachor,
            });
        }
    }
    Ok(rows)
}

fn render_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(rows.len() * 96 + 64);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let opt = |v: Option<f64>| v.map(fmt17).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            fmt17(row.beta),
            fmt17(row.alpha),
            fmt17(row.delta),
            fmt17(row.omega_rad),
            opt(row.chsh_covariant),
            opt(row.chsh_czachor),
        ));
    }
    out
}

/// Write via a temp file plus atomic rename so a failed run never leaves a
/// partial output behind.
fn write_atomic(path: &std::path::Path, contents: &[u8]) -> Result<(), CliError> {
    let parent = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => std::path::Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(parent)?;
    tmp.write_all(contents)?;
    tmp.persist(path)
        .map_err(|e| CliError::Compute(format!("cannot persist output: {e}")))?;
    Ok(())
}

pub fn run(args: &SweepArgs) -> Result<(), CliError> {
    validate(args)?;
    let rows = compute_rows(args)?;
    let bytes = match args.format {
        DataFormat::Csv => render_csv(&rows).into_bytes(),
        DataFormat::Json => {
            let mut bytes = serde_json::to_vec_pretty(&rows)
                .map_err(|e| CliError::Compute(format!("json encoding failed: {e}")))?;
            bytes.push(b'\n');
            bytes
        }
    };
    write_atomic(&args.output, &bytes)?;
    Ok(())
}
