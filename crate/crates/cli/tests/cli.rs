//! End-to-end tests of the binary: exit-code contract, report round-trips,
//! and figure emission.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_besselprod"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("besselprod-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn eval_product_prints_fifteen_digits() {
    let out = run(&["eval", "product", "--nu", "0", "--x", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(s.starts_with("0.533044674956"), "got {s}");
    assert_eq!(s.trim().len(), "0.533044674956268".len());
}

#[test]
fn eval_domain_error_exits_3() {
    let out = run(&["eval", "product", "--nu", "0", "--x", "-1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("domain"));
}

#[test]
fn unknown_flag_exits_3() {
    let out = run(&["eval", "product", "--frobnicate", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn eval_more_functions() {
    let out = run(&["eval", "bessel-k", "--nu", "0.5", "--x", "1"]);
    assert!(stdout(&out).starts_with("0.4610685044"));
    let out = run(&["eval", "gamma", "--x", "5"]);
    assert!(stdout(&out).starts_with("24.0000000"));
    let out = run(&["eval", "logderiv-k", "--nu", "0.5", "--x", "2"]);
    assert!(stdout(&out).starts_with("-2.5000000"));
    let out = run(&["eval", "bessel-i", "--nu", "2", "--x", "700", "--scaled"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("scale_exponent"));
}

#[test]
fn bound_values() {
    let out = run(&["bound", "--id", "U1", "--nu", "0.5", "--mu", "1", "--x", "1"]);
    assert!(stdout(&out).starts_with("1.17913270388711"));
    let out = run(&["bound", "--id", "L3", "--nu", "2", "--x", "1"]);
    assert!(stdout(&out).starts_with("0.208333333333333"));
    // T2 is a check, not a bound formula
    let out = run(&["bound", "--id", "T2", "--nu", "1", "--x", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_sweep_exit_zero() {
    let out = run(&[
        "verify", "--id", "T2", "--nu", "0.5", "--x-min", "0.01", "--x-max", "100",
        "--x-count", "200", "--x-log",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(s.starts_with("id,nu,mu,x,lhs,rhs,margin,verdict\n"));
    assert_eq!(s.lines().count(), 201);
}

#[test]
fn verify_default_grid_when_no_axes() {
    let out = run(&["verify", "--id", "TK"]);
    assert_eq!(out.status.code(), Some(0));
}

// The XF fixture is compiled in debug builds only, which is what cargo test
// uses; it exercises the violated and indeterminate exit paths.
#[test]
fn forced_violation_exits_1() {
    let out = run(&[
        "verify", "--id", "XF", "--nu", "1", "--x-min", "1", "--x-max", "100",
        "--x-count", "10", "--x-log",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn forced_tie_exits_2() {
    // P_{1/2}(x) crosses 1/(4x) exactly at x = ln(2)/2: margin below the
    // error bar, strict statement, verdict indeterminate
    let x = (std::f64::consts::LN_2 / 2.0).to_string();
    let out = run(&["verify", "--id", "XF", "--nu", "0.5", "--x", &x]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_csv_round_trip() {
    let path = tmp("t2.csv");
    let out = run(&[
        "verify", "--id", "T2", "--nu", "1", "--x-min", "0.1", "--x-max", "10",
        "--x-count", "25", "--x-log", "--out", path.to_str().unwrap(), "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed = besselprod::verify::SweepReport::parse_csv(&text).unwrap();
    assert_eq!(parsed.len(), 25);
    let direct = besselprod::verify::sweep(
        besselprod::bounds::InequalityId::T2,
        &besselprod::verify::SweepGrid {
            nu: besselprod::verify::AxisSpec::values(&[1.0]),
            mu: None,
            x: besselprod::verify::AxisSpec::log(0.1, 10.0, 25),
        },
    )
    .unwrap();
    assert_eq!(parsed, direct.records);
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_json_round_trip() {
    let path = tmp("t2.json");
    let out = run(&[
        "verify", "--id", "T2", "--nu", "1", "--x-min", "0.1", "--x-max", "10",
        "--x-count", "10", "--x-log", "--out", path.to_str().unwrap(), "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["id"], "T2");
    assert_eq!(v["records"].as_array().unwrap().len(), 10);
    assert_eq!(v["n_violated"], 0);
    let records: Vec<besselprod::bounds::BoundRecord> =
        serde_json::from_value(v["records"].clone()).unwrap();
    assert_eq!(records.len(), 10);
    std::fs::remove_file(&path).ok();
}

#[test]
fn figure1_csv_and_svg() {
    let csv_path = tmp("fig1.csv");
    let out = run(&["figure1", "--out", csv_path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 501);
    assert_eq!(lines[0].split(',').count(), 9);
    std::fs::remove_file(&csv_path).ok();

    let svg_path = tmp("fig1.svg");
    let out = run(&["figure1", "--out", svg_path.to_str().unwrap(), "--format", "svg"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert_eq!(svg.matches("<polyline").count(), 8);
    std::fs::remove_file(&svg_path).ok();
}

#[test]
fn figure1_unwritable_path_exits_3() {
    let out = run(&["figure1", "--out", "/nonexistent-dir/fig1.csv"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn explore_emits_brackets() {
    let out = run(&["explore", "--target", "nu-star", "--tol", "0.02"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let b = &v[0]["bracket"];
    let (lo, hi) = (b["lo"].as_f64().unwrap(), b["hi"].as_f64().unwrap());
    assert!(lo >= 0.15 && hi <= 0.25 && hi - lo <= 0.02 + 1e-12);
}

#[test]
fn xmin_env_override_is_honoured() {
    // a coarser floor changes the q_0 scan maximum the explorer reports
    let out = bin()
        .args(["explore", "--target", "nu-star", "--tol", "0.02"])
        .env("BESSELPROD_XMIN", "1e-4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["x_min"].as_f64().unwrap(), 1e-4);
}
