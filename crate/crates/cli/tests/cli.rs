//! End-to-end behavior of the command-line interface: flag validation,
//! output formats, and exit codes (0 ok, 2 config, 3 compute, 4 no
//! crossing).

use std::process::Command;

fn bellboost() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bellboost"))
}

#[test]
fn sweep_writes_the_exact_header_and_constant_covariant_column() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let status = bellboost()
        .args([
            "sweep",
            "--beta-min",
            "0",
            "--beta-max",
            "0.9",
            "--beta-steps",
            "20",
            "--delta",
            "1.5",
            "--state",
            "psi-",
            "--observable",
            "both",
            "--output",
        ])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());

    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "beta,alpha,delta,omega_rad,chsh_covariant,chsh_czachor"
    );
    let tsirelson = 2.0 * std::f64::consts::SQRT_2;
    let mut previous_czachor = f64::INFINITY;
    let mut rows = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 6);
        let covariant: f64 = fields[4].parse().unwrap();
        assert!((covariant - tsirelson).abs() < 1e-10, "row: {line}");
        let czachor: f64 = fields[5].parse().unwrap();
        assert!(czachor < previous_czachor + 1e-12);
        previous_czachor = czachor;
        rows += 1;
    }
    assert_eq!(rows, 20);
}

#[test]
fn sweep_supports_json_and_multiple_deltas() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    let status = bellboost()
        .args([
            "sweep",
            "--beta-steps",
            "3",
            "--delta",
            "2.0",
            "--delta",
            "0.5",
            "--state",
            "phi+",
            "--observable",
            "covariant",
            "--format",
            "json",
            "--output",
        ])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());

    let rows: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    // deltas sorted ascending inside each beta block
    assert_eq!(rows[0]["delta"], 0.5);
    assert_eq!(rows[1]["delta"], 2.0);
    assert!(rows[0]["chsh_czachor"].is_null());
    assert!(rows[0]["chsh_covariant"].is_number());
}

#[test]
fn sweep_rejects_bad_grids_without_leaving_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("never.csv");
    for args in [
        vec!["--beta-min", "0.5", "--beta-max", "0.5"],
        vec!["--beta-min", "0.5", "--beta-max", "0.4"],
        vec!["--beta-max", "1.0"],
        vec!["--beta-steps", "1"],
        vec!["--delta", "-1"],
    ] {
        let output = bellboost()
            .args(["sweep", "--output"])
            .arg(&path)
            .args(&args)
            .output()
            .unwrap();
        assert_eq!(output.status.code(), Some(2), "args: {args:?}");
        assert!(!path.exists(), "partial file left for args {args:?}");
    }
}

#[test]
fn sweep_rejects_czachor_for_non_singlet_states() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("never.csv");
    let output = bellboost()
        .args(["sweep", "--state", "phi+", "--observable", "czachor", "--output"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("singlet"), "stderr: {stderr}");
}

#[test]
fn verify_coarse_passes_and_writes_a_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let output = bellboost()
        .args(["verify", "--grid", "coarse", "--output"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(output.status.success());
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("300 of 300 comparisons passed"), "{stdout}");

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["total"], 300);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_fails_under_injected_tolerance() {
    let output = bellboost()
        .args(["verify", "--grid", "coarse", "--tolerance", "1e-16", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&output.stdout)).unwrap();
    assert_eq!(report["passed"], false);
    assert!(!report["failures"].as_array().unwrap().is_empty());
}

#[test]
fn critical_beta_reports_value_and_residual() {
    let output = bellboost()
        .args(["critical-beta", "--delta", "3", "--format", "json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&output.stdout)).unwrap();
    let beta_c = report["beta_c"].as_f64().unwrap();
    assert!((beta_c - 0.559869910683).abs() < 1e-8);
    assert!(report["residual"].as_f64().unwrap().abs() < 1e-8);
}

#[test]
fn critical_beta_distinguishes_no_crossing_from_config_errors() {
    // No crossing at delta = 0: the curve stays above 2 on [0, 1).
    let output = bellboost()
        .args(["critical-beta", "--delta", "0"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(4));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("never crosses"), "stderr: {stderr}");

    let output = bellboost()
        .args(["critical-beta", "--delta", "-2"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn optimize_prints_value_and_bound() {
    let output = bellboost()
        .args(["optimize", "--state", "psi-", "--omega", "0", "--format", "json"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&output.stdout)).unwrap();
    let tsirelson = 2.0 * std::f64::consts::SQRT_2;
    assert!((report["value"].as_f64().unwrap() - tsirelson).abs() < 1e-9);
    assert!((report["horodecki_bound"].as_f64().unwrap() - tsirelson).abs() < 1e-9);

    let output = bellboost()
        .args(["optimize", "--state", "phi-", "--omega", "1.5707963"])
        .output()
        .unwrap();
    assert!(output.status.success());
}

#[test]
fn unknown_state_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let output = bellboost()
        .args(["sweep", "--state", "sigma+", "--output"])
        .arg(dir.path().join("never.csv"))
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}
