//! End-to-end tests of the command-line interface: exit codes, JSON shapes,
//! pipelines, and determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_commat"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .expect("stdin piped")
            .write_all(text.as_bytes())
            .expect("stdin accepts input");
    }
    drop(child.stdin.take());
    child.wait_with_output().expect("binary terminates")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

const EXAMPLE_SPEC: &str = r#"{"f":["2","-3","0","1"],"g":["1","2","1"]}"#;
const EXAMPLE_ALGEBRA: &str =
    r#"{"generators":[["2","-3","0","1"],["1","2","1"]],"vars":["x","y"]}"#;

#[test]
fn frobenius_pipeline_exits_12() {
    let generated = run(&["generate", "frobenius"], None);
    assert_eq!(exit_code(&generated), 0);
    let family = stdout_of(&generated);
    assert!(family.contains("\"matrices\""));
    let analyzed = run(&["analyze", "-"], Some(&family));
    assert_eq!(exit_code(&analyzed), 12);
    assert!(stdout_of(&analyzed).contains("\"NEGATIVE_ABSOLUTE_PROBABILISTIC\""));
}

#[test]
fn counterexample_pipeline_exits_11() {
    let generated = run(&["generate", "counterexample", "-"], Some(EXAMPLE_SPEC));
    assert_eq!(exit_code(&generated), 0);
    let family = stdout_of(&generated);
    let analyzed = run(&["analyze", "-"], Some(&family));
    assert_eq!(exit_code(&analyzed), 11);
    assert!(stdout_of(&analyzed).contains("\"NEGATIVE_ABSOLUTE\""));
}

#[test]
fn conjugated_counterexample_keeps_its_verdict() {
    let spec = r#"{"f":["2","-3","0","1"],"g":["1","2","1"],"seed":5}"#;
    let generated = run(&["generate", "counterexample", "-"], Some(spec));
    assert_eq!(exit_code(&generated), 0);
    let family = stdout_of(&generated);
    assert!(family.contains("\"conjugator\""));
    let analyzed = run(&["analyze", "-"], Some(&family));
    assert_eq!(exit_code(&analyzed), 11);
}

#[test]
fn constructed_family_exits_0() {
    let family = r#"{"matrices":[
        {"rows":2,"cols":2,"entries":[["1","0"],["0","2"]]},
        {"rows":2,"cols":2,"entries":[["3","0"],["0","3"]]}
    ]}"#;
    let analyzed = run(&["analyze", "-"], Some(family));
    assert_eq!(exit_code(&analyzed), 0);
    let report = stdout_of(&analyzed);
    assert!(report.contains("\"CONSTRUCTED\""));
    assert!(report.contains("\"polynomials\""));
}

#[test]
fn non_commuting_family_exits_20() {
    let family = r#"{"matrices":[
        {"rows":2,"cols":2,"entries":[["0","1"],["0","0"]]},
        {"rows":2,"cols":2,"entries":[["0","0"],["1","0"]]}
    ]}"#;
    let analyzed = run(&["analyze", "-"], Some(family));
    assert_eq!(exit_code(&analyzed), 20);
    assert!(stdout_of(&analyzed).contains("\"UNKNOWN\""));
}

#[test]
fn quotient_subcommands() {
    let dim = run(&["quotient", "dim", "-"], Some(EXAMPLE_ALGEBRA));
    assert_eq!(exit_code(&dim), 0);
    assert_eq!(stdout_of(&dim).trim(), r#"{"dim":6}"#);

    let codim = run(&["quotient", "codim", "-"], Some(EXAMPLE_ALGEBRA));
    assert_eq!(stdout_of(&codim).trim(), r#"{"codim":5}"#);

    let primitive = run(&["quotient", "primitive", "-"], Some(EXAMPLE_ALGEBRA));
    assert_eq!(stdout_of(&primitive).trim(), r#"{"primitive":false}"#);

    let separable = r#"{"generators":[["-2","0","1"],["-3","0","1"]],"vars":["x","y"]}"#;
    let primitive = run(&["quotient", "primitive", "-"], Some(separable));
    assert_eq!(
        stdout_of(&primitive).trim(),
        r#"{"primitive":true,"linear_form":["1","1"]}"#
    );
}

#[test]
fn quotient_member_and_annihilator() {
    let query = r#"{
        "poly":[{"exps":[2,0],"coef":"1"},{"exps":[1,0],"coef":"-4"},{"exps":[0,0],"coef":"4"}],
        "grid":{"axes":[[{"root":"2","mult":2}],[{"root":"0","mult":1}]]}
    }"#;
    // (x − 2)² lies in the ideal of ((x−2)², y)
    let member = run(&["quotient", "member", "-"], Some(query));
    assert_eq!(exit_code(&member), 0);
    assert_eq!(stdout_of(&member).trim(), r#"{"member":true}"#);

    let query = r#"{
        "poly":[{"exps":[1,0],"coef":"1"}],
        "grid":{"axes":[[{"root":"2","mult":2}],[{"root":"0","mult":1}]]}
    }"#;
    let member = run(&["quotient", "member", "-"], Some(query));
    assert_eq!(stdout_of(&member).trim(), r#"{"member":false}"#);
    let annihilator = run(&["quotient", "annihilator", "-"], Some(query));
    // x over the grid {2(×2)}×{0}: F = (t − 2)²
    assert_eq!(
        stdout_of(&annihilator).trim(),
        r#"{"annihilator":["4","-4","1"]}"#
    );
}

#[test]
fn malformed_json_exits_2_with_diagnostic() {
    let analyzed = run(&["analyze", "-"], Some("{not json"));
    assert_eq!(exit_code(&analyzed), 2);
    let stderr = String::from_utf8(analyzed.stderr).unwrap();
    assert!(stderr.contains("malformed"));

    let quotient = run(
        &["quotient", "dim", "-"],
        Some(r#"{"generators":[],"vars":[]}"#),
    );
    assert_eq!(exit_code(&quotient), 2);

    let missing = run(&["analyze", "/nonexistent/path.json"], None);
    assert_eq!(exit_code(&missing), 2);

    // separable polynomial violates the counterexample invariant
    let bad_spec = r#"{"f":["-2","0","1"],"g":["1","2","1"]}"#;
    let generated = run(&["generate", "counterexample", "-"], Some(bad_spec));
    assert_eq!(exit_code(&generated), 2);
}

#[test]
fn identical_inputs_give_byte_identical_output() {
    let family = {
        let generated = run(&["generate", "frobenius"], None);
        stdout_of(&generated)
    };
    let args = ["analyze", "-", "--trials", "60", "--seed", "9"];
    let first = run(&args, Some(&family));
    let second = run(&args, Some(&family));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(exit_code(&first), exit_code(&second));
}

#[test]
fn text_format_is_human_readable() {
    let family = {
        let generated = run(&["generate", "frobenius"], None);
        stdout_of(&generated)
    };
    let analyzed = run(&["analyze", "-", "--format", "text"], Some(&family));
    let text = stdout_of(&analyzed);
    assert!(text.contains("verdict: NEGATIVE_ABSOLUTE_PROBABILISTIC"));
    assert!(text.contains("inseparable"));
}

#[test]
fn selftest_passes() {
    let output = run(&["selftest"], None);
    assert_eq!(exit_code(&output), 0);
    assert!(stdout_of(&output).contains("all checks passed"));
}
