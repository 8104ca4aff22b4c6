use std::process::{Command, Output};

use serde_json::Value;

fn iafn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iafn")).args(args).output().expect("binary runs")
}

fn json_report(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = iafn(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn assert_schema(v: &Value) {
    assert!(v["check"].is_string());
    assert!(v["params"].is_object());
    assert!(v["elapsed_ms"].is_u64());
    let rows = v["rows"].as_array().expect("rows array");
    for r in rows {
        assert!(r["degree"].is_u64());
        assert!(r.get("computed").is_some());
        assert!(r.get("expected").is_some());
        assert!(["PAPER", "TRIVIAL", "DERIVED"].contains(&r["provenance"].as_str().unwrap()));
        assert!(r["pass"].is_boolean());
    }
}

#[test]
fn r_terms_json_schema() {
    let v = json_report(&["r-terms"]);
    assert_schema(&v);
    assert_eq!(v["check"], "r-terms");
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["pass"] == true));
}

#[test]
fn every_subcommand_emits_schema() {
    for args in [
        vec!["theorem1", "--max-degree", "3"],
        vec!["verify-mccool", "--truncation", "4"],
        vec!["pr4", "--max-degree", "2"],
        vec!["bounds", "--max-degree", "2"],
        vec!["re3", "--max-degree", "2"],
        vec!["witt", "--n", "3", "--max-degree", "4"],
        vec!["johnson-depth", "--word", "x1 x2 x1^-1 x2^-1"],
    ] {
        assert_schema(&json_report(&args));
    }
}

#[test]
fn vacuous_relator_check() {
    let v = json_report(&["verify-mccool", "--n", "2", "--truncation", "6"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["computed"], 0);
}

#[test]
fn reports_are_reproducible() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = strip(json_report(&["re3", "--max-degree", "3", "--parallel", "2"]));
    let b = strip(json_report(&["re3", "--max-degree", "3"]));
    assert_eq!(a, b);
}

#[test]
fn csv_and_table_formats() {
    let out = iafn(&["witt", "--n", "2", "--max-degree", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("check,degree,label,computed,expected,provenance,pass"));
    assert_eq!(lines.count(), 2 * 3 * 2);

    let out = iafn(&["witt", "--n", "2", "--max-degree", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("12 rows, 0 failed"));
}

#[test]
fn heavy_degree_needs_opt_in() {
    let v = json_report(&["theorem1", "--max-degree", "6"]);
    assert_eq!(v["rows"].as_array().unwrap().iter().map(|r| r["degree"].as_u64().unwrap()).max(), Some(5));
    assert!(v["notes"].as_array().is_some_and(|n| !n.is_empty()));
}

#[test]
fn bad_input_exits_with_error() {
    let out = iafn(&["johnson-depth", "--word", "x1 y2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    let out = iafn(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}
