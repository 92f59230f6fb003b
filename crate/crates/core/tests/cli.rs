//! End-to-end checks of the command-line interface via the built binary.

use std::process::{Command, Output};

fn weylpi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylpi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_identity_exits_zero() {
    let out = weylpi(&["verify", "--char", "0", "--named", "Phi22"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("Identity"));
}

#[test]
fn verify_refutation_exits_one_with_witness() {
    let out = weylpi(&["verify", "--char", "0", "--expr", "x1*x2 - x2*x1"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("NotIdentity"));
    assert!(text.contains("witness"));
}

#[test]
fn verify_delta_depends_on_characteristic() {
    let out = weylpi(&["verify", "--char", "2", "--named", "delta"]);
    assert_eq!(out.status.code(), Some(0));
    let out = weylpi(&["verify", "--char", "0", "--named", "delta"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn solve_reports_the_expected_dimension() {
    let out = weylpi(&["solve", "--mdeg", "2,1,1", "--char", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["char"], 2);
    assert_eq!(v["mdeg"], serde_json::json!([2, 1, 1]));
}

#[test]
fn solve_json_round_trips() {
    let out = weylpi(&["solve", "--mdeg", "2,2", "--char", "0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let text = serde_json::to_string(&v).unwrap();
    let back: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v, back);
    assert_eq!(
        v["basis"],
        serde_json::json!([["1", "-3", "2", "2", "-3", "1"]])
    );
}

#[test]
fn eval_renders_the_normal_form() {
    let out = weylpi(&["eval", "--expr", "x1*x2", "--at", "1,2", "--char", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "x^3*y^2 + 2*x^2*y");
}

#[test]
fn linearize_splits_a_variable() {
    let out = weylpi(&[
        "linearize",
        "--expr",
        "x1*x2^2*x3^3",
        "--var",
        "2",
        "--parts",
        "1,1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "x1*x2*x3*x4^3 + x1*x3*x2*x4^3");
}

#[test]
fn normal_form_rewrites_the_word() {
    let out = weylpi(&["normal-form", "--word", "yx"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "x*y + 1");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    // Unknown flag.
    let out = weylpi(&["verify", "--nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    // Bad expression.
    let out = weylpi(&["verify", "--char", "0", "--expr", "x1 + + x2"]);
    assert_eq!(out.status.code(), Some(2));
    // Non-prime characteristic.
    let out = weylpi(&["verify", "--char", "4", "--named", "phi22"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown named element.
    let out = weylpi(&["verify", "--char", "0", "--named", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    // Missing input entirely.
    let out = weylpi(&["verify", "--char", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn repro_passes_and_prints_one_line_per_criterion() {
    let out = weylpi(&["repro"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let pass_lines = text.lines().filter(|l| l.starts_with("PASS")).count();
    assert_eq!(pass_lines, 11);
    assert!(!text.contains("FAIL"));
    // Deterministic and idempotent: a second run prints the same table.
    let again = weylpi(&["repro"]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(stdout(&again), text);
}
