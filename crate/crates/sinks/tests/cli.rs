//! End-to-end tests of the `sinks` binary: byte-exact output and exit codes.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_str().unwrap().to_owned()
}

fn sinks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sinks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sinks_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sinks"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn chromatic_prints_coefficients_low_to_high() {
    let out = sinks(&["chromatic", &fixture("p3.g")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 1 -2 1\n");
}

#[test]
fn chromatic_reads_standard_input_for_dash() {
    let out = sinks_with_stdin(&["chromatic", "-"], "d 3\ne 1 2\ne 2 3\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0 1 -2 1\n");
}

#[test]
fn missing_or_malformed_files_exit_two() {
    let out = sinks(&["chromatic", "/no/such/file.g"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let out = sinks_with_stdin(&["chromatic", "-"], "d 3\ne 1 9\n");
    assert_eq!(out.status.code(), Some(2));

    let out = sinks(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orient_counts_then_lists_words() {
    let out = sinks(&["orient", &fixture("p3.g"), "--sink", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n<<\n");

    let out = sinks(&["orient", &fixture("k3.g")]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("6"));
    assert_eq!(lines.clone().count(), 6);
    assert!(lines.all(|w| w.len() == 3 && w.chars().all(|c| c == '<' || c == '>')));

    let out = sinks(&["orient", &fixture("p3.g"), "--sink", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nbc_lists_sets_smallest_first() {
    let out = sinks(&["nbc", &fixture("k3.g")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{}\n{1}\n{2}\n{3}\n{1,3}\n{2,3}\n");

    let out = sinks(&["nbc", &fixture("k3.g"), "--size", "2"]);
    assert_eq!(stdout(&out), "{1,3}\n{2,3}\n");
}

#[test]
fn bijection_emits_word_trace_and_tree() {
    let out = sinks(&["bijection", &fixture("k3.g"), "--sink", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "normal >>>\n<<> I,u,u {2,3}\n<<< u,I,u {1,3}\n"
    );
}

#[test]
fn bijection_invert_consumes_edge_sets() {
    let out = sinks_with_stdin(
        &["bijection", &fixture("k3.g"), "--sink", "1", "--invert"],
        "{2,3}\n{1,3}\n",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "normal >>>\n<<>\n<<<\n");

    // A broken circuit is rejected as input.
    let out = sinks_with_stdin(
        &["bijection", &fixture("k3.g"), "--sink", "1", "--invert"],
        "{1,2}\n",
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bijection_seeded_normal_is_reproducible() {
    let args = [
        "bijection",
        &fixture("k3.g"),
        "--sink",
        "1",
        "--normal-seed",
        "7",
    ];
    let first = sinks(&args);
    let second = sinks(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
    assert!(stdout(&first).starts_with("normal "));
}

#[test]
fn ncsf_prints_each_requested_view() {
    let p3 = fixture("p3.g");
    let out = sinks(&["ncsf", &p3]);
    assert_eq!(stdout(&out), "+(1)·m_{13/2} +(1)·m_{1/2/3}\n");

    let out = sinks(&["ncsf", &p3, "--basis", "e"]);
    assert_eq!(
        stdout(&out),
        "+(1/2)·e_{123} +(1/2)·e_{12/3} -(1/2)·e_{13/2} +(1/2)·e_{1/23}\n"
    );

    let out = sinks(&["ncsf", &p3, "--commutative"]);
    assert_eq!(stdout(&out), "+(1)·e_{2,1} +(3)·e_{3}\n");

    let out = sinks(&["ncsf", &p3, "--spec-ones", "3"]);
    assert_eq!(stdout(&out), "12\n");

    let out = sinks(&["ncsf", &p3, "--commutative", "--spec-ones", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = sinks(&["ncsf", &p3, "--basis", "m", "--commutative"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reports_pass_per_identity() {
    let out = sinks(&["verify", &fixture("k3.g"), "--all-sinks"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 6);
    assert!(!text.contains("FAIL"));
    assert!(text.ends_with("1 graphs, 0 failures\n"));
}
