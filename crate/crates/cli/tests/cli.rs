use std::process::{Command, Output};

use cxj_core::rational::{format_rational, frac, parse_rational};
use proptest::prelude::*;

fn cxj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cxj")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cxj(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fails(args: &[&str]) -> String {
    let out = cxj(args);
    assert!(!out.status.success(), "{args:?} should fail");
    assert!(out.stdout.is_empty(), "{args:?} wrote partial output");
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.trim_end().lines().count(), 1, "diagnostic not one line: {err:?}");
    err
}

#[test]
fn classify_outputs() {
    assert_eq!(
        stdout(&["classify", "-g", "2", "-a", "2", "-b", "1", "-c", "1"]),
        "boundary (nef, not ample), defect 0\n"
    );
    assert!(stdout(&["classify", "-g", "2", "-a", "0", "-b", "0", "-c", "0"]).starts_with("boundary (apex)"));
    assert_eq!(stdout(&["classify", "-g", "2", "-a", "1", "-b", "1", "-c", "1"]), "outside (defect -1)\n");
    assert_eq!(stdout(&["classify", "-g", "3", "4,1,1"]), "interior (ample, big), defect 1\n");
    assert_eq!(stdout(&["classify", "-g", "2", "-a", "-1/2", "-b", "3", "-c", "0"]), "outside (defect -3/2)\n");
}

#[test]
fn pair_and_intersect() {
    assert!(stdout(&["pair", "-g", "2", "1,1,1", "2,1,1"]).starts_with("2 "));
    assert!(stdout(&["intersect", "-g", "2", "0,1,0", "0,1,0", "0,1,0"]).starts_with("0 "));
    assert!(stdout(&["pair", "-g", "3", "0,0,1", "0,0,1"]).starts_with("-12 "));
    assert!(stdout(&["intersect", "-g", "2", "2,1,1", "2,1,1", "0,1,0"]).starts_with("4 "));
}

#[test]
fn pullback_and_witness() {
    assert_eq!(stdout(&["pullback", "-g", "2", "-m", "0", "-n", "1"]), "(0,1,0)\n");
    assert_eq!(stdout(&["pullback", "-g", "3", "-m", "2", "-n", "5"]), "(12,25,10)\n");
    assert_eq!(stdout(&["pullback", "-g", "2", "-m", "1/2", "-n", "-3"]), "(1/2,9,-3/2)\n");
    assert_eq!(stdout(&["witness", "-g", "2", "-n", "1"]), "(8,1,2), degree 8, height 3/2\n");
    assert_eq!(stdout(&["witness", "-g", "4", "-n", "1"]), "(64,1,4), degree 64, height 45/2\n");
}

#[test]
fn heights_and_minima() {
    assert_eq!(stdout(&["height", "-g", "2", "8,1,2"]), "height 3/2 (1.500000), degree 8\n");
    assert_eq!(stdout(&["height", "-g", "3", "27,1,3", "--base-scale", "2"]), "height 64/3 (21.333333), degree 27\n");
    assert_eq!(stdout(&["curve-height", "-g", "5"]), "96 (96.000000)\n");
    assert_eq!(stdout(&["curve-height", "-g", "2", "1,0,0"]), "0 (0.000000)\n");
    let m = stdout(&["minima", "-g", "3"]);
    assert!(m.starts_with("infimum 16/3 (5.333333) at s* = 1/27, t* = 1/9"), "{m}");
    assert!(m.contains("f_{3,1}^*theta = (27,1,3)"));
    assert_eq!(stdout(&["decompose", "-g", "3", "5,0,0"]), "degenerate: boundary part (0,0,0), alpha excess 5\n");
}

#[test]
fn audit_text() {
    let out = stdout(&["audit", "-g", "2"]);
    assert!(out.contains("second inequality VIOLATED by 1/2"));
    assert!(out.contains("e1 = 3/2"));
    assert!(out.contains("h  = 1 "));
    let out = stdout(&["audit", "-g", "3", "2,5,0"]);
    assert!(out.contains("second inequality h >= (e1+e2)/2 holds"));
}

#[test]
fn structured_formats() {
    let json = stdout(&["audit", "-g", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["e1"], "16/3");
    assert_eq!(v["violation_margin"], "4/3");
    assert_eq!(v["second_inequality_holds"], false);
    let csv = stdout(&["--format", "csv", "witness", "-g", "2", "-n", "3"]);
    assert_eq!(csv, "a,b,c,degree,height\n24,3,6,24,3/2\n");
    let table = stdout(&["table", "2", "3", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&table).unwrap();
    assert_eq!(rows[1]["margin"], "4/3");
}

#[test]
fn table_defaults_to_two_through_twelve() {
    let csv = stdout(&["table", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 12);
    assert!(lines[1].starts_with("2,"));
    assert!(lines[11].starts_with("12,"));
    assert!(stdout(&["table", "2", "3"]).starts_with("g "));
}

#[test]
fn table_is_deterministic() {
    let args = ["table", "2", "12", "--format", "json"];
    assert_eq!(cxj(&args).stdout, cxj(&args).stdout);
}

#[test]
fn error_paths() {
    assert!(fails(&["classify", "-g", "1", "1,1,1"]).contains("genus"));
    assert!(fails(&["pair", "-g", "2", "1,1"]).starts_with("error"));
    assert!(fails(&["pair", "-g", "2", "1,1,1", "1,1/0,1"]).contains("invalid rational"));
    assert!(fails(&["intersect", "-g", "3", "1,1,1", "1,1,1"]).contains("needs 4 classes"));
    assert!(fails(&["witness", "-g", "2", "-n", "0"]).contains("positive"));
    assert!(fails(&["witness", "-g", "1", "-n", "1"]).contains("genus"));
    assert!(fails(&["table", "4", "3", "--format", "csv"]).contains("exceeds"));
    assert!(fails(&["table", "1", "3"]).contains("at least 2"));
    assert!(fails(&["decompose", "-g", "2", "1,1,1"]).contains("not nef"));
    assert!(fails(&["height", "-g", "2", "0,1,0"]).contains("degree"));
    assert!(fails(&["curve-height", "-g", "2", "0,1,0"]).contains("generic degree"));
    assert!(fails(&["audit", "-g", "2", "1,1,1"]).contains("not nef"));
    assert!(fails(&["pair", "1,1,1", "1,1,1"]).contains("--genus"));
    assert!(fails(&["classify", "-g", "2", "-a", "1"]).contains("classify"));
    assert!(fails(&["frobnicate"]).starts_with("error"));
}

#[test]
fn help_exits_zero() {
    let out = cxj(&["--help"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("table"));
}

proptest! {
    #[test]
    fn printed_rationals_reparse(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = frac(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn cli_pullback_round_trips(p in -50i64..50, q in 1i64..50, n in -50i64..50) {
        let m = format_rational(&frac(p, q));
        let n = n.to_string();
        let out = stdout(&["--format", "csv", "pullback", "-g", "3", "-m", &m, "-n", &n]);
        let row = out.lines().nth(1).unwrap().to_string();
        let cells: Vec<_> = row.split(',').map(|c| parse_rational(c).unwrap()).collect();
        let reprinted: Vec<_> = cells.iter().map(format_rational).collect();
        prop_assert_eq!(reprinted.join(","), row);
    }
}
