//! End-to-end tests for the command-line interface: output shapes, exit
//! codes, JSON schema stability, and run-to-run determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qbernoulli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn beta_prints_reduced_fractions() {
    let out = run(&["beta", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![
            "beta_0 = 1",
            "beta_1 = -1 / (q + 1)",
            "beta_2 = q / (q^3 + 2*q^2 + 2*q + 1)",
        ]
    );
}

#[test]
fn beta_evaluates_at_q() {
    let out = run(&["beta", "--n", "4", "--at-q", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("at q = 1: 1, -1/2, 1/6, 0, -1/30"));
}

#[test]
fn beta_json_schema() {
    let out = run(&["beta", "--n", "0", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), r#"{"beta":[{"num":["1"],"den":["1"]}]}"#);
}

#[test]
fn beta_json_round_trips() {
    let out = run(&["beta", "--n", "5", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid json");
    let betas = doc["beta"].as_array().expect("array");
    assert_eq!(betas.len(), 6);
    for (n, b) in betas.iter().enumerate() {
        let parsed = qbernoulli::ratfunc::fieldq_from_json(b).expect("parses");
        assert_eq!(parsed, qbernoulli::beta_number(n), "beta_{n} round-trip");
        assert_eq!(qbernoulli::ratfunc::fieldq_to_json(&parsed), *b);
    }
}

#[test]
fn beta_pole_is_reported_with_exit_3() {
    let out = run(&["beta", "--n", "1", "--at-q", "-1"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).expect("utf-8 stderr");
    assert!(err.contains("pole at q = -1"), "stderr was: {err}");
}

#[test]
fn hankel_verify_reports_equal() {
    let out = run(&["hankel", "--shift", "0", "--n", "2", "--verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("det(shift=0, n=2) = -1 / (q^4 + 3*q^3 + 4*q^2 + 3*q + 1)"));
    assert!(text.contains("EQUAL"));
}

#[test]
fn hankel_shift_three_one_by_one_is_beta3() {
    let out = run(&["hankel", "--shift", "3", "--n", "1", "--verify"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("EQUAL"));
}

#[test]
fn hankel_large_shift_is_unverified() {
    let out = run(&["hankel", "--shift", "4", "--n", "2", "--verify"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("UNVERIFIED"));
    // without --verify: value only, exit 0
    let out = run(&["hankel", "--shift", "4", "--n", "2"]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("UNVERIFIED"));
}

#[test]
fn hankel_json_includes_verification() {
    let out = run(&["hankel", "--shift", "1", "--n", "2", "--verify", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid json");
    assert_eq!(doc["shift"], 1);
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["verify"]["equal"], true);
}

#[test]
fn cfrac_prints_closed_coefficients() {
    let out = run(&["cfrac", "--series", "B", "--order", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("c_1 = 1 / (q + 1)"));
    assert!(text.contains("c_2 = -1 / (q^3 + 2*q^2 + 2*q + 1)"));
}

#[test]
fn cfrac_b2_first_coefficient() {
    let out = run(&["cfrac", "--series", "B2", "--order", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("c_1 = (q - 1) / (q^2 + 1)"));
}

#[test]
fn cfrac_check_passes() {
    let out = run(&["cfrac", "--series", "B", "--order", "8", "--check"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("check: OK"));
}

#[test]
fn cfrac_z_series_renders() {
    let out = run(&["cfrac", "--series", "Bz", "--order", "1"]);
    assert!(out.status.success());
    // c_1 = (1 - z)/(q + 1)
    assert!(stdout(&out).contains("c_1 = (-1 / (q + 1))*z + (1 / (q + 1))"));
}

#[test]
fn verify_quick_passes_and_is_deterministic() {
    let first = run(&["verify", "--profile", "quick"]);
    assert!(first.status.success());
    let text = stdout(&first);
    assert_eq!(text.matches("PASS").count(), 13);
    assert!(text.contains("13 of 13 checks passed"));
    let second = run(&["verify", "--profile", "quick"]);
    assert_eq!(first.stdout, second.stdout, "byte-identical reruns");
}

#[test]
fn verify_json_shape() {
    let out = run(&["verify", "--profile", "quick", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid json");
    assert_eq!(doc["ok"], true);
    assert_eq!(doc["profile"], "quick");
    assert_eq!(doc["results"].as_array().expect("results").len(), 13);
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["beta"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["cfrac", "--series", "nope", "--order", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
