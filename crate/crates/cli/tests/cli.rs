//! End-to-end tests of the `efrac` binary: line formats, exit codes, and
//! file outputs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn efrac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_efrac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn temp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("efrac-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn expand_prints_greedy_expansion() {
    let out = efrac(&["expand", "2/5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1/3 + 1/15\n");

    let out = efrac(&["expand", "3/7"]);
    assert_eq!(stdout(&out), "1/3 + 1/11 + 1/231\n");
}

#[test]
fn expand_rejects_out_of_domain_input() {
    for bad in ["5/4", "0", "-1/2", "x"] {
        let out = efrac(&["expand", bad]);
        assert_eq!(code(&out), 2, "input {bad}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn sum_and_sub_line_formats() {
    let out = efrac(&["sum", "1/3", "1/3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1/2 + 1/6\n");

    let out = efrac(&["sub", "1/5+1/10+1/20", "1/10+1/30"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1/5 + 1/20 - 1/30\n");

    // signed input to the standard sum is a usage error
    let out = efrac(&["sum", "1/2-1/3", "1/4"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn check_reports_and_exit_codes() {
    let out = efrac(&["check", "--base", "2", "1", "1"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("lhs = 1\n"));
    assert!(text.contains("rhs = 0\n"));
    assert!(text.contains("z = 1\n"));
    assert!(text.contains("linear = no\n"));

    let out = efrac(&["check", "--base", "2", "1", "01"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("linear = yes\n"));

    let out = efrac(&["check", "--base", "3", "1", "T"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("sigma_z = 0\n"));

    let out = efrac(&["check", "--base", "3", "1", "1"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("sigma_z = 1/2\n"));

    // bad digits are usage errors
    let out = efrac(&["check", "--base", "2", "1", "T"]);
    assert_eq!(code(&out), 2);
    let out = efrac(&["check", "--base", "5", "1", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn encode_round_trips_representations() {
    let out = efrac(&["encode", "--base", "3", "[10T]_3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("value = 8\n"));

    let out = efrac(&["encode", "3/8"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("digits = 011\n"));
    assert!(text.contains("numeral = [0.011]_2\n"));
    assert!(text.contains("egyptian = 1/3 + 1/4\n"));
    assert!(text.contains("sigma = 7/12\n"));

    let out = efrac(&["encode", "--base", "3", "1T"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("value = 2/9\n"));

    // no finite form: the two constant-tail expansions are listed
    let out = efrac(&["encode", "--base", "3", "1/6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("digits = none\n"));
    assert!(text.contains("dual = 0(1...)\n"));
    assert!(text.contains("dual = 1(T...)\n"));

    // outside the fractional domain
    let out = efrac(&["encode", "--base", "2", "3/2"]);
    assert_eq!(code(&out), 2);

    // malformed numeral
    let out = efrac(&["encode", "[0._2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn member_verdicts() {
    let out = efrac(&[
        "fractal", "member", "--set", "sierpinski", "--depth", "8", "1/4,1/8",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "member\n");

    let out = efrac(&[
        "fractal", "member", "--set", "sierpinski", "--depth", "1", "3/8,3/8",
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "not member\n");

    let out = efrac(&[
        "fractal", "member", "--set", "snowflake", "--depth", "4", "--trace", "1/2,-1/2",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "member\ntrace: 3,3,3,3\n");

    // snowflake points outside the bounding square are usage errors
    let out = efrac(&["fractal", "member", "--set", "snowflake", "2/3,0"]);
    assert_eq!(code(&out), 2);

    let out = efrac(&["fractal", "member", "--set", "sierpinski", "1/4"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn render_writes_deterministic_files() {
    let path = temp_path("tri.svg");
    let args = [
        "fractal", "render", "--set", "sierpinski", "--depth", "3", "--format", "svg",
        "--width", "256", "--out",
    ];
    let out = efrac(&[&args[..], &[path.to_str().unwrap()]].concat());
    assert_eq!(code(&out), 0);
    let first = std::fs::read(&path).unwrap();
    assert_eq!(
        String::from_utf8_lossy(&first).matches("<polygon").count(),
        27
    );
    let out = efrac(&[&args[..], &[path.to_str().unwrap()]].concat());
    assert_eq!(code(&out), 0);
    let second = std::fs::read(&path).unwrap();
    assert_eq!(first, second);
    std::fs::remove_file(&path).ok();

    // width below the interface minimum
    let out = efrac(&[
        "fractal", "render", "--set", "sierpinski", "--depth", "1", "--format", "pgm",
        "--width", "2", "--out", "/tmp/efrac-too-small.pgm",
    ]);
    assert_eq!(code(&out), 2);

    // cell guard: 3^15 exceeds the cell budget
    let out = efrac(&[
        "fractal", "render", "--set", "sierpinski", "--depth", "15", "--format", "svg",
        "--width", "256", "--out", "/tmp/efrac-too-deep.svg",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn cloud_files_and_guards() {
    let path = temp_path("cloud.pgm");
    let out = efrac(&[
        "fractal", "cloud", "--base", "2", "--len", "4", "--format", "pgm",
        "--width", "16", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let pgm = std::fs::read(&path).unwrap();
    assert!(pgm.starts_with(b"P5\n16 16\n255\n"));
    let dark = pgm[pgm.len() - 256..].iter().filter(|b| **b == 0).count();
    assert_eq!(dark, 81); // 3^4 distinct marks
    std::fs::remove_file(&path).ok();

    let out = efrac(&[
        "fractal", "cloud", "--base", "2", "--len", "13", "--format", "pgm",
        "--width", "16", "--out", "/tmp/efrac-cloud-guard.pgm",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_small_runs() {
    let summary = temp_path("sum2.txt");
    let out = efrac(&[
        "verify", "--prop", "sum2", "--depth", "3", "--out",
        summary.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("checked: 64\n"));
    assert!(text.contains("linear_pairs: 27\n"));
    assert!(text.contains("result: PASS\n"));
    let line = std::fs::read_to_string(&summary).unwrap();
    assert!(line.starts_with("property=sum2 "));
    assert!(line.contains(" violations=0 "));
    std::fs::remove_file(&summary).ok();

    let out = efrac(&["verify", "--prop", "sum3", "--depth", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("z_empty_pairs: 49\n"));

    // guard: over-cap depth exits 3
    let out = efrac(&["verify", "--prop", "sum2", "--depth", "13"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn usage_errors_exit_2() {
    let out = efrac(&["frobnicate"]);
    assert_eq!(code(&out), 2);
    let out = efrac(&["expand", "2/5", "--frob"]);
    assert_eq!(code(&out), 2);
    let out = efrac(&["check", "--base", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn help_is_available_everywhere() {
    for args in [
        vec!["--help"],
        vec!["expand", "--help"],
        vec!["sum", "--help"],
        vec!["sub", "--help"],
        vec!["check", "--help"],
        vec!["encode", "--help"],
        vec!["fractal", "--help"],
        vec!["fractal", "member", "--help"],
        vec!["fractal", "render", "--help"],
        vec!["fractal", "cloud", "--help"],
        vec!["verify", "--help"],
    ] {
        let out = efrac(&args);
        assert_eq!(code(&out), 0, "args {args:?}");
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn diagnostics_never_interleave_with_results() {
    // on failure, stdout stays empty and stderr carries the message
    let out = efrac(&["expand", "7/3"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("efrac:"));
}
