use std::process::{Command, Output};

use serde_json::Value;

fn insets(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_insets"))
        .args(args)
        .env_remove("INSETS_FIXTURES")
        .env_remove("INSETS_REMOTE")
        .env("INSETS_OFFLINE", "1")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = insets(args);
    assert!(
        out.status.success(),
        "insets {args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let text = stdout(&full);
    assert_eq!(text.lines().count(), 1, "one document per invocation");
    serde_json::from_str(&text).unwrap()
}

fn code(args: &[&str]) -> i32 {
    insets(args).status.code().unwrap()
}

#[test]
fn compute_json_carries_decimal_strings() {
    let v = json(&["compute", "1", "3", "2"]);
    assert_eq!(
        v,
        serde_json::json!({ "m": 1, "n": 3, "k": 2, "value": "18" })
    );
    let big = json(&["compute", "60", "60", "60"]);
    let digits = big["value"].as_str().unwrap();
    assert!(digits.len() > 20 && digits.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn csv_outputs_have_headers() {
    assert_eq!(
        stdout(&["--format", "csv", "compute", "2", "2", "2"]),
        "m,n,k,value\n2,2,2,13\n"
    );
    assert_eq!(
        stdout(&["--format", "csv", "seq", "odd_numbers", "2"]),
        "index,value\n0,1\n1,3\n"
    );
    assert_eq!(
        stdout(&["--format", "csv", "poly", "0", "2"]),
        "degree,coefficient\n0,-1\n1,0\n2,4\n"
    );
    let words = stdout(&["--format", "csv", "words", "0", "3", "2"]);
    assert_eq!(words.lines().next(), Some("word"));
    assert_eq!(words.lines().count(), 7);
    let table = stdout(&["--format", "csv", "table", "1", "1"]);
    assert_eq!(table, "m,k,value\n0,0,2\n0,1,1\n1,0,2\n1,1,3\n1,2,1\n");
}

#[test]
fn json_documents_are_well_formed() {
    let w = json(&["words", "0", "3", "2"]);
    assert_eq!(w["count"], "6");
    assert_eq!(w["words"].as_array().unwrap().len(), 6);
    let v = json(&["verify", "all", "3", "3"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 13);
    let s = json(&["series", "m", "3", "2", "10", "--check"]);
    assert_eq!(s["check"]["passed"], true);
    assert_eq!(s["coefficients"][1], "6");
    let p = json(&["poly", "1", "4"]);
    assert_eq!(
        p["coefficients"],
        serde_json::json!(["1", "0", "-8", "0", "8"])
    );
    let q = json(&["seq", "centered_square", "3"]);
    assert_eq!(q["values"], serde_json::json!(["1", "5", "13"]));
    let c = json(&["crosscheck", "delannoy"]);
    assert_eq!(c["results"][0]["status"], "validated");
    assert_eq!(c["results"][0]["offset"], 0);
    let t = json(&["table", "0", "3"]);
    assert_eq!(t["rows"][3], serde_json::json!(["1", "3", "3", "1"]));
    let cat = json(&["catalog"]);
    assert!(cat
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["key"] == "delannoy" && e["oeis_id"] == "A008288"));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["verify", "all", "4", "4"][..],
        &["--format", "json", "crosscheck", "all"],
        &["words", "3", "3", "2"],
        &["table", "3", "5"],
    ] {
        assert_eq!(insets(args).stdout, insets(args).stdout, "{args:?}");
    }
}

#[test]
fn table_plain() {
    assert_eq!(stdout(&["table", "0", "3"]), "1\n1 1\n1 2 1\n1 3 3 1\n");
    assert_eq!(stdout(&["table", "2", "0"]), "4 4 1\n");
}

#[test]
fn word_listing_guard() {
    assert_eq!(code(&["words", "8", "8", "6"]), 2);
    let limited = stdout(&["words", "8", "8", "6", "--limit", "3"]);
    assert_eq!(limited.lines().count(), 4);
    assert!(limited.ends_with("count: 325360\n"));
    assert_eq!(code(&["words", "15", "6", "2"]), 2);
}

#[test]
fn exit_statuses() {
    assert_eq!(code(&["series", "k", "1", "1", "513"]), 2);
    assert_eq!(code(&["series", "k", "1", "1", "512"]), 0);
    assert_eq!(code(&["seq", "no_such_sequence", "3"]), 2);
    assert_eq!(code(&["seq", "squares", "0"]), 2);
    assert_eq!(code(&["crosscheck", "no_such_sequence"]), 2);
    assert_eq!(code(&["compute", "-1", "0", "0"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn crosscheck_all_offline() {
    let out = stdout(&["crosscheck", "all"]);
    assert!(out
        .lines()
        .all(|l| l.contains(" validated offset=") || l.ends_with("skipped (no OEIS id)")));
    assert!(out.contains("squares_convolution A033455 validated offset=-1"));
}

#[test]
fn fixture_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_insets"))
        .args(["crosscheck", "odd_numbers"])
        .env("INSETS_FIXTURES", dir.path())
        .env("INSETS_OFFLINE", "true")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
