mod common;

use std::collections::BTreeSet;
use std::process::Command;

use latgen::cli::run;
use latgen::{canonical_key, Lattice};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("latgen").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn count_prints_every_size() {
    let (code, out, _) = invoke(&["count", "--size", "7", "--class", "modular"]);
    assert_eq!(code, 0);
    assert_eq!(out, "1\t1\n2\t1\n3\t1\n4\t2\n5\t4\n6\t8\n7\t16\n");
    let (code, out, _) = invoke(&["count", "--size", "1", "--class", "all"]);
    assert_eq!((code, out.as_str()), (0, "1\t1\n"));
}

#[test]
fn count_output_is_independent_of_jobs() {
    let base = invoke(&["count", "--size", "10", "--class", "semimodular", "--vi"]).1;
    for args in [
        ["--jobs", "2", "--split-depth", "5"],
        ["--jobs", "4", "--split-depth", "0"],
        ["--jobs", "1", "--split-depth", "8"],
    ] {
        let mut full = vec!["count", "--size", "10", "--class", "semimodular", "--vi"];
        full.extend(args);
        assert_eq!(invoke(&full).1, base);
    }
    assert!(base.ends_with("10\t53\n"));
}

#[test]
fn weight_algorithm_flag() {
    let (code, out, _) = invoke(&["count", "--size", "8", "--algorithm", "weight"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("8\t222\n"));
}

#[test]
fn table_row_ten() {
    let (code, out, _) = invoke(&["table", "--size", "10"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[10], "10\t5994\t212\t53\t157\t28");
    assert_eq!(lines[3], "3\t1\t1\t0\t1\t0");
}

#[test]
fn emit_matches_count() {
    let (code, out, err) = invoke(&["emit", "--size", "8", "--class", "modular"]);
    assert_eq!(code, 0);
    let lattices: Vec<Lattice> = out.lines().map(|s| s.parse().unwrap()).collect();
    assert_eq!(lattices.len(), 34);
    assert!(err.ends_with("8\t34\n"));
    let keys: BTreeSet<String> = lattices.iter().map(canonical_key).collect();
    assert_eq!(keys.len(), 34);
}

#[test]
fn emit_to_file() {
    let path = std::env::temp_dir().join(format!("latgen-emit-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = invoke(&["emit", "--size", "9", "--class", "modular", "--vi", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.ends_with("9\t12\n"));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().all(|s| !common::is_vd_oracle(&s.parse().unwrap())));
}

#[test]
fn alphabeta_emits_and_verifies() {
    let (code, out, _) = invoke(&["alphabeta", "--size", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 8);
    let (code, out, _) = invoke(&["alphabeta", "--size", "8", "--verify"]);
    assert_eq!(code, 0);
    assert_eq!(out, "8\t32\t34\tok\n");
}

#[test]
fn verify_passes() {
    let (code, out, err) = invoke(&["verify", "--max-n", "7"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.lines().all(|l| l.ends_with("\tok")));
    assert_eq!(out.lines().count(), 5 * 3 * 2 + 1);
}

#[test]
fn invalid_invocations_fail() {
    for args in [
        vec!["verify", "--max-n", "10"],
        vec!["count", "--size", "8", "--class", "distributive"],
        vec!["count", "--size", "0"],
        vec!["count", "--size", "65"],
        vec!["count", "--size", "8", "--split-depth", "8"],
        vec!["count", "--size", "8", "--bogus"],
        vec!["alphabeta", "--size", "2"],
        vec!["alphabeta", "--size", "15", "--verify"],
        vec!["frobnicate"],
    ] {
        let (code, _, err) = invoke(&args);
        assert_ne!(code, 0, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_latgen"))
        .args(["count", "--size", "6", "--class", "semimodular"])
        .env("LATGEN_JOBS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("6\t8\n"));
    let bad = Command::new(env!("CARGO_BIN_EXE_latgen")).arg("count").output().unwrap();
    assert!(!bad.status.success());
}
