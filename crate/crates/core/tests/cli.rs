use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fx(rel: &str) -> String {
    fixtures().join(rel).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_friezelab")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn frieze_reports_growth_as_decimal_strings() {
    let v = json(&["frieze", "--quiddity", "8,2", "--growth", "3"]);
    assert_eq!(v["growth"]["1"], "14");
    assert_eq!(v["growth"]["3"], "2702");
    assert_eq!(v["rows"][4], serde_json::json!(["1560", "390"]));
    assert_eq!(v["class"], "affine-fast");
}

#[test]
fn frieze_human_output_is_staggered() {
    let out = run(&["frieze", "--quiddity", "4,4", "--depth", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[1].trim_start().starts_with('1'));
    assert!(lines[2].trim_start().starts_with('4'));
    assert!(lines[4].contains("56"));
    let indent = |s: &str| s.len() - s.trim_start().len();
    assert!(indent(lines[2]) > indent(lines[1]));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["frieze", "--quiddity", "3,-1"]).status.code(), Some(2));
    assert_eq!(run(&["frieze"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["grassmannian", "--rep", "x", "--primes", "4"]).status.code(), Some(2));
}

#[test]
fn module_errors_exit_with_one_and_a_json_error() {
    let out = run(&["cc", "--rep", "/definitely/missing.json"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "io");
    let out = run(&["mutate", "--quiver", &fx("d4/quiver.json"), "--word", "9"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "cluster");
}

#[test]
fn mutate_search_and_theta() {
    let m = json(&["mutate", "--quiver", &fx("kronecker/quiver.json"), "--word", "0", "--seed"]);
    assert_eq!(m["variables"][0], "x0^-1 + x0^-1*x1^2");
    let s = json(&["search", "--quiver", &fx("d4/quiver.json")]);
    assert!(s["visited"].as_u64().unwrap() <= 1000);
    let t = json(&["theta", "--quiver", &fx("e6/quiver.json"), "--at-ones"]);
    assert_eq!(t["value"], "322");
    let t = json(&["theta", "--quiver", &fx("d4/quiver.json"), "--invariance-words", "1;2;1,2"]);
    assert_eq!(t["value"], "14");
    assert_eq!(t["invariant"], true);
}

#[test]
fn grassmannian_and_cc() {
    let t = json(&["grassmannian", "--rep", &fx("d4/m_lambda.json")]);
    assert_eq!(t["rows"].as_array().unwrap().len(), 13);
    assert_eq!(t["total"], "14");
    let one = json(&["grassmannian", "--rep", &fx("d4/m_lambda.json"), "--dimvec", "1,1,1,0,0", "--primes", "3,5,7,11"]);
    assert_eq!(one["chi"], "2");
    assert_eq!(json(&["cc", "--rep", &fx("d4/m_degenerate.json"), "--at-ones"])["value"], "15");
}

#[test]
fn tube_frieze_and_growth_identity() {
    let f = json(&["tube-frieze", "--quiver", &fx("d4/quiver.json"), "--tube", &fx("d4/tube2.json"), "--growth", "2"]);
    assert_eq!(f["quiddity"], serde_json::json!(["4", "4"]));
    assert_eq!(f["growth"]["2"], "194");
    let g = json(&["growth-identity", "--x1", "14", "--k", "6"]);
    assert_eq!(g["agree"], true);
    assert_eq!(g["u"][3], "2716");
}

#[test]
fn modular_relations_on_eshape() {
    let v = json(&["modular", "--quiver", &fx("e6/eshape.json"), "--word", "ta,ta", "--check-relations"]);
    assert_eq!(v["relations"]["all_hold"], true);
    assert_eq!(v["word_order"], "LeftmostFirst");
}

#[test]
fn reproduce_and_fixture_writing() {
    let out = run(&["reproduce-paper", "--only", "d4,kronecker"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 8);

    let dir = std::env::temp_dir().join(format!("friezelab-fixtures-{}", std::process::id()));
    assert!(run(&["fixtures", "--dir", dir.to_str().unwrap()]).status.success());
    let out = run(&["reproduce-paper", "--fixtures", dir.to_str().unwrap(), "--only", "d4-cc-laurent"]);
    assert!(out.status.success());
    std::fs::remove_dir_all(dir).unwrap();

    let out = run(&["reproduce-paper", "--fixtures", "/nonexistent", "--only", "d4-friezes"]);
    assert_eq!(out.status.code(), Some(1));
}
