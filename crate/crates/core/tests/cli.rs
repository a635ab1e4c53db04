//! The `sigma` binary: exit codes, written files and certificate checking.

mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn sigma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigma"))
        .args(args)
        .output()
        .expect("run sigma")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn analyze_s3_fixture() {
    let out = tempfile::tempdir().unwrap();
    let o = sigma(&["analyze", p(&common::fixture("s3")), "--out", p(out.path())]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("S3 order 6 degree 3 classes 3"));
    let tsv = fs::read_to_string(out.path().join("s3_classes.tsv")).unwrap();
    assert_eq!(tsv.lines().count(), 4);
}

#[test]
fn analyze_reports_parse_errors_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("group.txt");
    fs::write(&bad, "group X degree 3 order 6\ngen (1,2,4)\n").unwrap();
    let o = sigma(&["analyze", p(&bad), "--out", p(dir.path())]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn incidence_writes_matrices_and_fusion_report() {
    let out = tempfile::tempdir().unwrap();
    let o = sigma(&["incidence", p(&common::data("u3_3")), "--out", p(out.path())]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let fusion = fs::read_to_string(out.path().join("fusion.txt")).unwrap();
    assert!(fusion.contains("fused 7AB = 7A 7B"));
    assert!(fusion.contains("same-order M3 M4 (order 96)"));
    let a = fs::read_to_string(out.path().join("A.tsv")).unwrap();
    assert!(a.starts_with("class\tM1\tM2\tM3\tM4\n"));
    assert!(out.path().join("B.tsv").exists());
}

#[test]
fn sigma_then_check_and_tamper() {
    let out = tempfile::tempdir().unwrap();
    let o = sigma(&["sigma", p(&common::data("u3_3")), "--out", p(out.path()), "--emit-ilp"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "U3(3): sigma = 64");
    assert!(out.path().join("u3_3_class.ilp").exists());
    let cert = out.path().join("u3_3.cert");
    let o = sigma(&["check", p(&cert)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    // Flip one bit somewhere in the middle of the file.
    let mut bytes = fs::read(&cert).unwrap();
    let mid = bytes.len() / 2;
    bytes[mid] ^= 0x01;
    let flipped = out.path().join("flipped.cert");
    fs::write(&flipped, &bytes).unwrap();
    let o = sigma(&["check", p(&flipped)]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));

    // Same certificate, pointed at another group's data.
    let text = fs::read_to_string(&cert).unwrap();
    let line = text.lines().find(|l| l.starts_with("data ")).unwrap();
    let wrong = text.replace(line, &format!("data {}", p(&common::data("u3_5"))));
    let wrong_path = out.path().join("wrong.cert");
    fs::write(&wrong_path, wrong).unwrap();
    let o = sigma(&["check", p(&wrong_path)]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("input digests"), "{}", stderr(&o));
}

#[test]
fn mcl_default_perturbed_alpha_and_missing_fact() {
    let out = tempfile::tempdir().unwrap();
    let tables = common::data("mcl/tables.txt");
    let o = sigma(&["mcl", p(&tables), "--out", p(out.path())]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "McL: sigma = 24553");
    let o = sigma(&["check", p(&out.path().join("mcl.cert"))]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    let o = sigma(&["mcl", p(&tables), "--alpha", "23", "--out", p(out.path())]);
    assert_eq!(code(&o), 2);
    assert_eq!(stdout(&o).trim(), "McL: sigma in [24552, 24553]");

    let text = fs::read_to_string(&tables).unwrap();
    let stripped: String = text
        .lines()
        .filter(|l| !l.starts_with("fact edge-stabilizer"))
        .map(|l| format!("{l}\n"))
        .collect();
    let missing = out.path().join("tables.txt");
    fs::write(&missing, stripped).unwrap();
    let o = sigma(&["mcl", p(&missing), "--out", p(out.path())]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("edge-stabilizer"), "{}", stderr(&o));
}

#[test]
fn bad_flags_are_errors() {
    let o = sigma(&["sigma", p(&common::data("u3_3")), "--budget", "0"]);
    assert_eq!(code(&o), 1);
    let o = sigma(&["check", "/nonexistent/file.cert"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&sigma(&["frobnicate"])), 1);
    assert_eq!(code(&sigma(&["sigma"])), 1);
    assert_eq!(code(&sigma(&["--help"])), 0);
}
