use std::path::Path;
use std::process::{Command, Output};

use qentropy::cli::{OutputEnvelope, Payload};

fn qentropy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qentropy"))
        .args(args)
        .env_remove("QENTROPY_ABS_TOLERANCE")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

#[test]
fn state_reports_table_values() {
    let out = qentropy(&["state", "ho", "--n", "0", "--omega", "1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout(&out);
    let row = body.lines().last().unwrap();
    assert!(row.starts_with("oscillator,0,1.0000,0.5000,1.0724,1.0724,2.1447,"), "{row}");

    let out = qentropy(&["state", "box", "--n", "1", "--xc", "0.5", "--format", "csv"]);
    let body = stdout(&out);
    assert!(body.lines().last().unwrap().starts_with("box,1,0.5000,19.7392,-1.0000,3.2120,"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["state", "ho", "--n", "0", "--omega", "-1"][..],
        &["state", "ho", "--n", "0"],
        &["state", "box", "--n", "0", "--xc", "1"],
        &["figure", "9"],
        &["table", "3"],
        &["table", "1", "--grid", "1,-2"],
        &["crossing", "ho", "--n", "0", "--lo", "2", "--hi", "3"],
        &["frobnicate"],
        &["state", "ho", "--n", "0", "--omega", "1", "--format", "xml"],
    ] {
        let out = qentropy(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(qentropy(&["--help"]).status.code(), Some(0));
    assert_eq!(qentropy(&["--version"]).status.code(), Some(0));
}

#[test]
fn numerical_failure_exits_two_with_estimate() {
    let out = qentropy(&["state", "box", "--n", "2", "--xc", "1", "--tolerance", "1e-22"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("error estimate"), "{err}");
}

#[test]
fn table_csv_is_deterministic_and_matches_golden() {
    for (id, file, rows) in [("1", "table1.csv", 13), ("2", "table2.csv", 18)] {
        let a = qentropy(&["table", id]);
        let b = qentropy(&["table", id]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
        let body = stdout(&a);
        assert_eq!(body, golden(file));
        let data_rows = body.lines().filter(|l| !l.starts_with('#')).count() - 1;
        assert_eq!(data_rows, rows);
    }
}

#[test]
fn table_grid_override_and_precision() {
    let out = qentropy(&["table", "1", "--grid", "1.0", "--precision", "6"]);
    let body = stdout(&out);
    let row = body.lines().last().unwrap();
    assert!(row.starts_with("1.000000,1.072365,1.342728,1.498609,1.072365,"), "{row}");
    assert!(body.contains("# command: table 1 --grid 1 --tolerance 1e-10"));
}

#[test]
fn json_round_trips_exactly() {
    let out = qentropy(&["table", "2", "--grid", "0.3,4", "--format", "json"]);
    let body = stdout(&out);
    let env: OutputEnvelope = serde_json::from_str(&body).unwrap();
    assert_eq!(env.schema_version, "1");
    assert_eq!(env.units, "atomic");
    let Payload::Table(t) = &env.payload else { panic!("expected a table") };
    assert_eq!(t.rows.len(), 2);
    assert_eq!(serde_json::to_string_pretty(&env).unwrap() + "\n", body);
    let again: OutputEnvelope = serde_json::from_str(&body).unwrap();
    assert_eq!(again, env);
}

#[test]
fn figure_series_counts() {
    let out = qentropy(&["figure", "5", "--format", "json", "--tolerance", "1e-8"]);
    let env: OutputEnvelope = serde_json::from_slice(&out.stdout).unwrap();
    let Payload::Figure(fig) = env.payload else { panic!() };
    assert_eq!(fig.series.len(), 3);
    for s in &fig.series {
        assert!(common_spread(&s.y) < 1e-6, "{} is not constant", s.name);
    }
    let out = qentropy(&["figure", "4"]);
    let body = stdout(&out);
    let names: std::collections::BTreeSet<&str> = body
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(names.len(), 6);
}

fn common_spread(v: &[f64]) -> f64 {
    v.iter().cloned().fold(f64::MIN, f64::max) - v.iter().cloned().fold(f64::MAX, f64::min)
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("state.json");
    let out = qentropy(&["state", "ho", "--n", "1", "--omega", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let env: OutputEnvelope = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(matches!(env.payload, Payload::State(_)));
}

#[test]
fn environment_overrides_default_tolerance() {
    let run = |val: &str| {
        Command::new(env!("CARGO_BIN_EXE_qentropy"))
            .args(["state", "ho", "--n", "0", "--omega", "1"])
            .env("QENTROPY_ABS_TOLERANCE", val)
            .output()
            .unwrap()
    };
    let out = run("1e-8");
    let env: OutputEnvelope = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(env.spec.abs_tolerance, 1e-8);
    assert_eq!(run("tight").status.code(), Some(1));
}

#[test]
fn crossing_command() {
    let out = qentropy(&["crossing", "ho", "--n", "1", "--lo", "0.5", "--hi", "2"]);
    let env: OutputEnvelope = serde_json::from_slice(&out.stdout).unwrap();
    let Payload::Crossing(c) = env.payload else { panic!() };
    assert!((c.parameter_value - 1.0).abs() < 1e-6);
    assert!((c.entropy_value - 1.3427).abs() < 5e-5);
}

#[test]
fn validate_exit_codes() {
    let out = qentropy(&["validate", "--only", "text"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let out = qentropy(&["validate", "--only", "table1", "--tolerance", "1e-9"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("FAIL"));
    let out = qentropy(&["validate", "--only", "table2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("table2-")).count(), 18 * 3 * 3);
}
