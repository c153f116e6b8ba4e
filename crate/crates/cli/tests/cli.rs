//! End-to-end checks of the command-line contract: output shapes, exit
//! codes, and the round-trip guarantee for printed literals.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clonoid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_reports_invariants_and_clones() {
    let out = run(&["analyze", "x1*x2 + x1*x3 + x2*x3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("charrank  1"));
    assert!(text.contains("parity    odd"));
    assert!(text.contains("Sc"));
    assert!(text.contains("SM"));
}

#[test]
fn analyze_truth_table_literal() {
    let out = run(&["analyze", "tt:0b01101001"]);
    let text = stdout(&out);
    assert!(text.contains("x1 + x2 + x3"));
    assert!(text.contains("Lc"));
}

#[test]
fn classify_examples() {
    let out = run(&["classify", "x1*x2*x3"]);
    assert_eq!(stdout(&out).trim(), "D3 ∩ C0E1");

    let out = run(&["classify", "x1+x2", "x1*x2"]);
    assert_eq!(stdout(&out).trim(), "D2 ∩ C0");

    let out = run(&["classify"]);
    assert_eq!(stdout(&out).trim(), "Empty");
}

#[test]
fn closure_check_agrees() {
    let out = run(&["closure", "x1*x2*x3", "--check"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("agreement: OK"));
}

#[test]
fn printed_anf_reparses_to_same_function() {
    // printer output is a valid input literal for every parsed function
    for lit in ["tt:0x69@3", "x1*x2 + 1", "0@3", "x2@3"] {
        let first = run(&["analyze", lit, "--format", "json"]);
        let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
        let anf = v[0]["anf"].as_str().unwrap();
        let table = v[0]["table"].as_str().unwrap();
        let second = run(&["analyze", anf, "--format", "json"]);
        let w: serde_json::Value = serde_json::from_slice(&second.stdout).unwrap();
        assert_eq!(w[0]["table"].as_str().unwrap(), table, "literal {lit}");
    }
}

#[test]
fn exit_codes() {
    // 0: verified
    assert_eq!(run(&["table3"]).status.code(), Some(0));
    // 1: verification failure (negative control)
    assert_eq!(run(&["table3", "--inject-fault"]).status.code(), Some(1));
    // 2: parse error
    assert_eq!(run(&["analyze", "x1 ? x2"]).status.code(), Some(2));
    // 2: usage error (unknown flag), via clap
    assert_eq!(run(&["analyze", "--bogus"]).status.code(), Some(2));
}

#[test]
fn table3_json_records() {
    let out = run(&["table3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["cap"], 4);
    assert!(v["ok"].as_bool().unwrap());
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 37 * 19 * 2);
    for r in records {
        assert!(r["verdict"]["verdict"] == "HoldsUpToCap" || r["verdict"]["verdict"] == "Fails");
    }
}

#[test]
fn stability_single_check() {
    let out = run(&[
        "stability",
        "--class",
        "NEQ",
        "--clone",
        "Lambda_c",
        "--side",
        "left",
    ]);
    let text = stdout(&out);
    assert!(text.contains("FAILS"), "{text}");

    let out = run(&[
        "stability",
        "--class",
        "NEQ",
        "--clone",
        "S",
        "--side",
        "left",
    ]);
    assert!(stdout(&out).contains("holds up to arity 4"));
}

#[test]
fn gfp_literals_and_closure() {
    let out = run(&["gfp", "gfp:p=3 poly:x1^2", "--closure", "--cap", "2"]);
    let text = stdout(&out);
    assert!(text.contains("degree      2"));
    assert!(text.contains("class: D2"));

    let out = run(&["gfp", "gfp:p=3 vt:0,1,1@1"]);
    assert!(stdout(&out).contains("x1^2"));
}

#[test]
fn lattice_counts_and_dot() {
    let out = run(&["lattice", "--deg-bound", "1", "--char-bound", "1"]);
    assert!(stdout(&out).starts_with("37 classes"));

    let out = run(&["lattice", "--deg-bound", "0", "--char-bound", "0"]);
    assert!(stdout(&out).starts_with("4 classes"));

    let out = run(&["lattice", "--dot"]);
    let text = stdout(&out);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("label=").count(), 37);
}

#[test]
fn env_var_caps_the_oracle() {
    let out = Command::new(env!("CARGO_BIN_EXE_clonoid"))
        .args(["closure", "x1", "--check"])
        .env("CLONOID_ARITY_CAP", "3")
        .output()
        .unwrap();
    assert!(stdout(&out).contains("arity 1..3"));
}
