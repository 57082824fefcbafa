use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ternlogic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn eval() {
    assert_eq!(stdout(&["eval", "~0"]), "2\n");
    assert_eq!(
        stdout(&["eval", "x+y", "--set", "x=0", "--set", "y=2"]),
        "2\n"
    );
    let out = run(&["eval", "x+y", "--set", "x=0"]);
    assert!(!out.status.success());
    let out = run(&["eval", "x", "--set", "x=3"]);
    assert!(!out.status.success());
}

#[test]
fn table() {
    assert_eq!(stdout(&["table", "~x"]), "vars: x\n201\n");
    assert_eq!(
        stdout(&["table", "x*y", "--vars", "y x"]),
        "vars: y x\n000011012\n"
    );
}

#[test]
fn equiv_reports_counterexample_with_status() {
    let out = run(&["equiv", "x+(y*z)", "(x+y)*(x+z)"]);
    assert!(!out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "x=2 y=0 z=1 : a=2 b=1\n"
    );
    assert_eq!(stdout(&["equiv", "~x@0", "~~x*1 @ x*1+2 @ ~x"]), "EQUAL\n");
}

#[test]
fn synth_from_file() {
    let path = scratch("sti.tt", "vars: x\n210\n");
    let arg = format!("@{}", path.display());
    assert_eq!(stdout(&["synth", &arg]), "x*1+2@~x*1+1@~~x*1+0\n");
    let simplified = stdout(&[
        "synth",
        path.to_str().unwrap(),
        "--simplify",
        "--budget",
        "8",
    ]);
    let check = stdout(&["equiv", simplified.trim(), "~~x*1 @ x*1+2"]);
    assert_eq!(check, "EQUAL\n");
}

#[test]
fn simplify_with_trace() {
    assert_eq!(stdout(&["simplify", "x*0"]), "0\n");
    let out = stdout(&["simplify", "--trace", "x*1 @ ~~x*1+2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines.contains(&"fusion-eq5 6 -> 0"));
    assert_eq!(lines.last(), Some(&"x"));
}

#[test]
fn expression_files() {
    let path = scratch("long.expr", "x*1 @ ~x*1 @ ~~x*1\n");
    assert_eq!(
        stdout(&["simplify", &format!("@{}", path.display())]),
        "0\n"
    );
}

#[test]
fn netlist_formats() {
    let dot = stdout(&["dot", "out=~x"]);
    assert_eq!(dot.matches("[label=").count(), 2);
    assert_eq!(dot.matches("->").count(), 1);
    assert_eq!(dot, stdout(&["dot", "out=~x"]));
    let json = stdout(&["json", "carry=x*1@y*1", "sum=x*1+y"]);
    assert!(json.contains("\"carry\"") && json.contains("\"ALPHA\""));
    assert!(!run(&["dot", "out=x*"]).status.success());
}

#[test]
fn stdcell_views() {
    assert_eq!(stdout(&["stdcell", "STI", "--table"]), "vars: x\n210\n");
    assert_eq!(
        stdout(&["stdcell", "tnand", "--expr"]),
        "(x*1@y*1)+2@(~~x+~~y)*1\n"
    );
    assert_eq!(
        stdout(&["stdcell", "TNAND", "--dot"]),
        include_str!("../../core/tests/golden/tnand.dot")
    );
    assert!(stdout(&["stdcell", "THA_SUM"]).contains("table: 012120201"));
    assert!(!run(&["stdcell", "NAND"]).status.success());
}

#[test]
fn census_and_verify() {
    let census = stdout(&["census"]);
    assert!(census.contains("distinct: 21"));
    assert!(census.contains("uncovered: 012 021 102 120 201 210"));
    let verify = stdout(&["verify"]);
    assert!(!verify.contains("FAIL"));
    assert_eq!(verify.lines().filter(|l| l.starts_with("law ")).count(), 25);
}

#[test]
fn usage_errors() {
    let out = run(&["frobnicate"]);
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
    let out = run(&["eval", "x**y"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains('2'));
}
