use std::process::{Command, Output};

use serde_json::Value;
use torsion_verify::{SuiteReport, SUITES};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn list_prints_every_suite() {
    let o = verify(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let names: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(names, SUITES);
}

#[test]
fn three_torsion_at_seven_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = verify(&["run", "--suite", "three-torsion", "--p", "7", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("three-torsion: 4 pass, 0 fail, 0 report"));
    let v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "three-torsion");
    assert_eq!(v["seed"], 0);
    assert!(v["artifact_version"].is_string());
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 4);
    for c in cases {
        assert_eq!(c["status"], "pass");
        assert_eq!(c["params"]["p"], 7);
        assert!(c["elapsed_ms"].is_u64());
    }
}

#[test]
fn same_seed_same_json_modulo_timing() {
    let dir = tempfile::tempdir().unwrap();
    let read = |name: &str| {
        let path = dir.path().join(name);
        let o = verify(&["run", "--suite", "cardano", "--cases", "15", "--seed", "9", "--json", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        let r: SuiteReport = serde_json::from_slice(&std::fs::read(path).unwrap()).unwrap();
        serde_json::to_vec(&r.without_timing()).unwrap()
    };
    assert_eq!(read("a.json"), read("b.json"));
}

#[test]
fn exploratory_suites_exit_zero() {
    for suite in ["ik24-exploratory", "remark-product"] {
        let o = verify(&["run", "--suite", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        assert!(stdout(&o).contains("REPORT"), "{suite}");
    }
}

#[test]
fn failing_case_exits_one() {
    // a common invariant plane exists for l = 2
    let o = verify(&["run", "--suite", "invariant-planes", "--ell", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    let o = verify(&["run", "--suite", "invariant-planes", "--ell", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("l=3/common-planes"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["run", "--suite", "unknown"][..],
        &["run"],
        &["run", "--suite", "three-torsion", "--p", "9"],
        &["run", "--all", "--p", "7"],
        &["run", "--suite", "group-orders", "--N", "x"],
        &["frobnicate"],
    ] {
        assert_eq!(verify(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn all_writes_one_report_per_suite() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("all.json");
    let o = verify(&["run", "--all", "--cases", "5", "--json", path.to_str().unwrap()]);
    // the l = 2 invariant-plane cases fail
    assert_eq!(o.status.code(), Some(1));
    let reports: Vec<SuiteReport> = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r.suite.as_str()).collect();
    assert_eq!(names, SUITES);
    let failing: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite.as_str()).collect();
    assert_eq!(failing, ["invariant-planes"]);
}
