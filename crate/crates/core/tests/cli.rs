use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn dfinite(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dfinite"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    Path::new(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).expect("golden file")
}

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

/// Runs with `--json`, checks the exit code and returns stdout and the
/// report.
fn run_with_report(args: &[&str], name: &str, code: i32) -> (String, Value) {
    let path = tmp(name);
    let path_str = path.to_str().unwrap();
    let mut full = args.to_vec();
    full.extend(["--json", path_str]);
    let out = dfinite(&full);
    assert_eq!(
        out.status.code(),
        Some(code),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    (String::from_utf8(out.stdout).unwrap(), report)
}

fn assert_valid(report: &Value) {
    let v = schema();
    let errors: Vec<String> = v.iter_errors(report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema errors: {errors:?}");
}

fn assert_operator_consistent(op: &Value) {
    let coeffs = op["coeffs"].as_array().unwrap();
    assert_eq!(op["order"].as_u64().unwrap() as usize, coeffs.len() - 1);
    let degree = coeffs
        .iter()
        .map(|c| c.as_array().unwrap().len() as i64 - 1)
        .max()
        .unwrap();
    assert_eq!(op["degree"].as_i64().unwrap(), degree);
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("wall_ms");
    v
}

#[test]
fn golden_telescoper() {
    let args = ["telescoper", "--f", "1/(y^2+x)"];
    let (stdout, report) = run_with_report(&args, "telescoper.json", 0);
    assert_eq!(stdout, golden("telescoper.txt"));
    assert_valid(&report);
    assert_operator_consistent(&report["operator"]);
    assert_eq!(report["operator"]["text"], "2*x*Dx + 1");
    assert_eq!(report["verification"]["ok"], true);
}

#[test]
fn golden_lclm() {
    let args = ["lclm", "--op", "x*Dx-1", "--op", "x*Dx-2"];
    let (stdout, report) = run_with_report(&args, "lclm.json", 0);
    assert_eq!(stdout, golden("lclm.txt"));
    assert_valid(&report);
    assert_operator_consistent(&report["operator"]);
    assert_eq!(report["operator"]["text"], "x^2*Dx^2 - 2*x*Dx + 2");
}

#[test]
fn golden_check_props() {
    let args = [
        "check-props",
        "--prop",
        "krylov-denominator",
        "--trials",
        "200",
        "--n",
        "2",
        "--delta",
        "3",
        "--seed",
        "7",
    ];
    let (stdout, report) = run_with_report(&args, "krylov.json", 0);
    assert_eq!(stdout, golden("check_props_krylov.txt"));
    assert_valid(&report);
    assert_eq!(report["trials"]["passed"], 200);
}

#[test]
fn every_command_emits_valid_reports() {
    let cases: &[&[&str]] = &[
        &[
            "telescoper",
            "--dx",
            "1",
            "--dy",
            "2",
            "--generic",
            "--certificate",
            "--seed",
            "4",
        ],
        &["resolvent", "--poly", "y^2 - x"],
        &["resolvent", "--dx", "2", "--dy", "2", "--generic", "--seed", "2"],
        &["symprod", "--op", "x*Dx-1", "--op", "x*Dx-2"],
        &[
            "lclm",
            "--order",
            "1",
            "--degree",
            "1",
            "--regular-infinity",
            "--seed",
            "9",
        ],
        &[
            "bounds-table",
            "--trials",
            "1",
            "--generic",
            "--regular-infinity",
            "--order",
            "1",
            "--degree",
            "1",
        ],
        &["check-props", "--prop", "det-den-laws", "--trials", "10"],
        &["check-props", "--prop", "lemma2-delta", "--trials", "10"],
        &["check-props", "--prop", "bounds", "--trials", "10", "--allow-improper"],
    ];
    for (k, args) in cases.iter().enumerate() {
        let (_, report) = run_with_report(args, &format!("case{k}.json"), 0);
        assert_valid(&report);
        if let Some(op) = report.get("operator") {
            assert_operator_consistent(op);
        }
        for row in report.get("rows").and_then(Value::as_array).into_iter().flatten() {
            assert_operator_consistent(&row["operator"]);
        }
    }
}

#[test]
fn reruns_are_deterministic() {
    let args = [
        "bounds-table",
        "--trials",
        "2",
        "--seed",
        "11",
        "--generic",
        "--regular-infinity",
    ];
    let (a_out, a) = run_with_report(&args, "rerun_a.json", 0);
    let (b_out, b) = run_with_report(&args, "rerun_b.json", 0);
    assert_eq!(a_out, b_out);
    assert_eq!(without_timing(a), without_timing(b));
    let args = [
        "symprod",
        "--seed",
        "5",
        "--order",
        "1",
        "--degree",
        "2",
        "--regular-infinity",
    ];
    let (a_out, _) = run_with_report(&args, "rerun_c.json", 0);
    let (b_out, _) = run_with_report(&args, "rerun_d.json", 0);
    assert_eq!(a_out, b_out);
}

#[test]
fn csv_export() {
    let path = tmp("table.csv");
    let out = dfinite(&[
        "bounds-table",
        "--instance",
        "lclm",
        "--trials",
        "2",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        header,
        ["instance", "params", "i", "observed", "bound", "slack", "asserted"]
    );
    for rec in rdr.records() {
        let rec = rec.unwrap();
        let (o, b, s): (i64, i64, i64) = (
            rec[3].parse().unwrap(),
            rec[4].parse().unwrap(),
            rec[5].parse().unwrap(),
        );
        assert_eq!(b - o, s);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(dfinite(&["telescoper", "--f", "1/(y^2+"]).status.code(), Some(2));
    assert_eq!(dfinite(&["lclm", "--op", "x*Dx + y"]).status.code(), Some(2));
    assert_eq!(dfinite(&["telescoper", "--f", "Dx/(y+1)"]).status.code(), Some(2));
    assert_eq!(dfinite(&["check-props", "--prop", "nonsense"]).status.code(), Some(2));
    assert_eq!(dfinite(&["--help"]).status.code(), Some(0));
}
