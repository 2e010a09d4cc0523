use std::process::{Command, Output};

use serde_json::Value;

fn nccov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nccov"))
        .args(args)
        .output()
        .expect("run nccov")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn check_passes_and_reports_json() {
    let out = nccov(&[
        "check",
        "--suite",
        "transform",
        "--dim",
        "2",
        "--trials",
        "50",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["suite"], "transform");
    assert_eq!(v["config"]["seed"], 7);
    assert!(v["elapsed_ms"].is_null());
    for p in v["properties"].as_array().unwrap() {
        assert_eq!(p["failures"], 0);
        assert_eq!(p["passes"], 50);
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "check", "--suite", "linear", "--trials", "20", "--seed", "42",
    ];
    assert_eq!(nccov(&args).stdout, nccov(&args).stdout);
}

#[test]
fn timing_flag_fills_elapsed() {
    let out = nccov(&["check", "--suite", "matrix", "--trials", "2", "--timing"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn text_format_lists_properties() {
    let out = nccov(&[
        "check", "--suite", "geo", "--trials", "5", "--format", "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.lines().filter(|l| l.starts_with("PASS geo/")).count() >= 4,
        "{text}"
    );
    assert!(text.contains("0 failures"));
}

#[test]
fn injected_fault_fails_with_counterexample() {
    let out = nccov(&[
        "check",
        "--suite",
        "polylinear",
        "--dim",
        "2",
        "--trials",
        "5",
        "--inject-fault",
        "flip-product-order",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let failing: Vec<&Value> = v["properties"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["failures"].as_u64().unwrap() > 0)
        .collect();
    assert!(!failing.is_empty());
    assert!(failing[0]["counterexample"]["g"].is_string());
}

#[test]
fn fault_hook_is_hidden_from_help() {
    let help = stdout(&nccov(&["check", "--help"]));
    assert!(help.contains("--max-terms"));
    assert!(!help.contains("inject"));
}

#[test]
fn bad_configuration_exits_with_error() {
    for args in [
        &["check", "--trials", "0"][..],
        &["check", "--dim", "9"],
        &["check", "--arity", "4"],
        &["check", "--max-terms", "0"],
    ] {
        let out = nccov(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(
            stderr(&out).contains("invalid configuration"),
            "{}",
            stderr(&out)
        );
    }
    assert_ne!(nccov(&["check", "--suite", "cube"]).status.code(), Some(0));
}

#[test]
fn demo_endo_conjugates() {
    let out = nccov(&["demo", "--kind", "endo", "--g", "i,0;0,1", "--f", "j,0;0,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("f2 = g.f1.g^-1 = -j,0;0,1"), "{text}");
    assert_eq!(text.lines().last(), Some("EQUAL"));
}

#[test]
fn demo_identity_basis_change() {
    let out = nccov(&[
        "demo",
        "--kind",
        "basis-change",
        "--g",
        "1,0;0,1",
        "--u",
        "-1/2+k,3j",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("v1         = -1/2+k,3j"), "{text}");
    assert!(text.contains("v2 = v1.g^-1 = -1/2+k,3j"), "{text}");
}

#[test]
fn demo_polylinear_and_skew() {
    let poly = nccov(&[
        "demo",
        "--kind",
        "polylinear",
        "--g",
        "1,i;j,2",
        "--a",
        "0,1,0: i,1+k,j | 1,0,0: 1,1,1",
    ]);
    assert_eq!(poly.status.code(), Some(0), "{}", stderr(&poly));
    assert!(stdout(&poly).ends_with("EQUAL\n"));
    let skew = nccov(&[
        "demo",
        "--kind",
        "skew",
        "--g",
        "1,k;0,1",
        "--a",
        "0,0,1: 1,1,1",
    ]);
    assert_eq!(skew.status.code(), Some(0), "{}", stderr(&skew));
    assert!(stdout(&skew).contains("via det*"));
}

#[test]
fn demo_parse_error_names_offset() {
    let out = nccov(&["demo", "--kind", "basis-change", "--g", "1+"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("parse error in --g at offset 2"),
        "{}",
        stderr(&out)
    );
    let out = nccov(&["demo", "--kind", "endo", "--g", "1", "--f", "2q"]);
    assert!(stderr(&out).contains("--f at offset 1"), "{}", stderr(&out));
}
