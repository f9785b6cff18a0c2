//! The `verify` subcommand: runs the oracle suite and reports pass/fail,
//! as a table for humans and as JSON for machines.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use bellboost::{run_suite, GridDensity, OracleReport, SuiteConfig};

use crate::{CliError, GridChoice, ReportFormat, VerifyArgs};

#[derive(Debug, Serialize)]
struct GroupSummary {
    name: String,
    comparisons: usize,
    worst_abs_error: f64,
    tolerance: f64,
    pass: bool,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    passed: bool,
    total: usize,
    groups: Vec<GroupSummary>,
    failures: Vec<OracleReport>,
}

fn group_name(quantity: &str) -> String {
    quantity
        .split('(')
        .next()
        .unwrap_or(quantity)
        .to_string()
}

fn summarize(reports: &[OracleReport]) -> VerifyReport {
    let mut groups: BTreeMap<String, GroupSummary> = BTreeMap::new();
    for r in reports {
        let entry = groups
            .entry(group_name(&r.quantity))
            .or_insert_with(|| GroupSummary {
                name: group_name(&r.quantity),
                comparisons: 0,
                worst_abs_error: 0.0,
                tolerance: r.tolerance,
                pass: true,
            });
        entry.comparisons += 1;
        entry.worst_abs_error = entry.worst_abs_error.max(r.abs_error);
        entry.pass &= r.pass;
    }
    VerifyReport {
        passed: reports.iter().all(|r| r.pass),
        total: reports.len(),
        groups: groups.into_values().collect(),
        failures: reports.iter().filter(|r| !r.pass).cloned().collect(),
    }
}

fn print_table(report: &VerifyReport) {
    println!(
        "{:<16} {:>12} {:>14} {:>10}  status",
        "quantity", "comparisons", "worst |err|", "tolerance"
    );
    for g in &report.groups {
        println!(
            "{:<16} {:>12} {:>14.3e} {:>10.1e}  {}",
            g.name,
            g.comparisons,
            g.worst_abs_error,
            g.tolerance,
            if g.pass { "pass" } else { "FAIL" }
        );
    }
    for f in &report.failures {
        println!(
            "FAIL {}  closed={:.17e} brute={:.17e} |err|={:.3e} > {:.1e}",
            f.quantity, f.closed_form, f.brute_force, f.abs_error, f.tolerance
        );
    }
    println!(
        "{} of {} comparisons passed",
        report.total - report.failures.len(),
        report.total
    );
}

pub fn run(args: &VerifyArgs) -> Result<(), CliError> {
    if let Some(t) = args.tolerance {
        if t <= 0.0 || !t.is_finite() {
            return Err(CliError::Config(format!(
                "--tolerance must be positive and finite, got {t}"
            )));
        }
    }
    let mut config = SuiteConfig {
        grid: match args.grid {
            GridChoice::Default => GridDensity::Default,
            GridChoice::Coarse => GridDensity::Coarse,
        },
        ..SuiteConfig::default()
    };
    if let Some(t) = args.tolerance {
        config = config.with_uniform_tolerance(t);
    }

    let suite = run_suite(&config)?;
    let report = summarize(&suite.reports);

    let json = serde_json::to_string_pretty(&report)
        .map_err(|e| CliError::Compute(format!("json encoding failed: {e}")))?;
    match args.format {
        ReportFormat::Table => print_table(&report),
        ReportFormat::Json => println!("{json}"),
    }
    if let Some(path) = &args.output {
        let mut file = std::fs::File::create(path)?;
        file.write_all(json.as_bytes())?;
        file.write_all(b"\n")?;
    }

    if report.passed {
        Ok(())
    } else {
        Err(CliError::Compute(format!(
            "{} of {} oracle comparisons failed",
            report.failures.len(),
            report.total
        )))
    }
}
