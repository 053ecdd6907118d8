//! End-to-end runs of the compiled binary.

use std::path::Path;
use std::process::{Command, Output};

use weylseries::cli::OutputDocument;
use weylseries::IntPoly;

fn weylseries(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylseries"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn hom_text_output_is_the_bare_polynomial() {
    let out = weylseries(&["hom", "--group", "U(2)", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim_end(),
        "1 + 3q + 6q^2 + 13q^3 + 18q^4 + 13q^5 + 6q^6 + 3q^7 + q^8"
    );
    let err = stderr(&out);
    assert!(err.contains("[ok]"), "diagnostics go to stderr: {err}");
    assert!(!err.contains("[FAIL]"));
}

#[test]
fn latex_format_brackets_exponents() {
    let out = weylseries(&["hom", "--group", "U(2)", "--n", "2", "--format", "latex"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim_end(),
        "1 + 2q + 2q^{2} + 4q^{3} + 5q^{4} + 2q^{5}"
    );
}

#[test]
fn hilbert_and_comm_text_payloads() {
    let out = weylseries(&["hilbert", "--group", "SU(2)", "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim_end(), "1 + q^2 s");

    let out = weylseries(&["comm", "--group", "SU(2)", "--tmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim_end(),
        "t^0: 1\nt^1: q^2 s\nt^2: s^2\nt^3: q^2 s^3"
    );

    let out = weylseries(&["homhat", "--group", "SU(2)", "--m", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim_end(), "q^2 s");
}

#[test]
fn json_round_trips_and_matches_the_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.json");
    let piped = weylseries(&["hom", "--group", "G2", "--n", "2", "--format", "json"]);
    assert_eq!(piped.status.code(), Some(0));
    let doc: OutputDocument = serde_json::from_str(&stdout(&piped)).unwrap();
    assert_eq!(
        doc.payload_poly().unwrap(),
        IntPoly::from_ints(&[1, 0, 1, 2, 1, 2, 1, 0, 0, 0, 1, 2, 0, 2, 3])
    );
    assert!(doc.all_passed);
    assert_eq!(doc.descriptor, "G2");
    assert_eq!(doc.n, Some(2));
    assert_eq!(doc.census_source, "enumerated");

    let saved = weylseries(&[
        "hom", "--group", "G2", "--n", "2", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(saved.status.code(), Some(0));
    let on_disk: OutputDocument =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(on_disk.payload, doc.payload);
    assert_eq!(on_disk.diagnostics, doc.diagnostics);
}

#[test]
fn e8_needs_a_census_file() {
    let out = weylseries(&["hom", "--group", "E8", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("696729600"), "{err}");
    assert!(err.contains("--census-file"), "{err}");
}

#[test]
fn census_files_round_trip_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("b3.censusjsonl");
    let second = dir.path().join("b3-again.censusjsonl");

    let out = weylseries(&["census", "--group", "B3", "--out", first.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("48"));

    // load it back and save it again: the bytes must not change
    let out = weylseries(&[
        "census", "--group", "B3",
        "--load", first.to_str().unwrap(),
        "--out", second.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        std::fs::read(&first).unwrap(),
        std::fs::read(&second).unwrap()
    );

    // the file feeds the series commands
    let out = weylseries(&[
        "hom", "--group", "B3", "--n", "2",
        "--census-file", first.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("census: file"));

    // but only for the matching group
    let out = weylseries(&[
        "hom", "--group", "A3", "--n", "2",
        "--census-file", first.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("does not match"));
}

#[test]
fn tampered_census_files_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.censusjsonl");
    let out = weylseries(&["census", "--group", "G2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let text = std::fs::read_to_string(&path).unwrap();
    let tampered = text.replace(r#""count":"2""#, r#""count":"3""#);
    assert_ne!(text, tampered, "fixture should contain a count of 2");
    std::fs::write(&path, tampered).unwrap();

    let out = weylseries(&[
        "hom", "--group", "G2", "--n", "1",
        "--census-file", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("malformed"), "{}", stderr(&out));
}

#[test]
fn check_command_prints_diagnostics_to_stdout() {
    let out = weylseries(&["check", "--group", "G2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("constant term"));
    assert!(text.contains("all checks passed"));
    assert_eq!(text.matches("[ok]").count(), 6);
}

#[test]
fn examples_reproduce() {
    let out = weylseries(&["examples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("all examples reproduced"));
    assert!(!text.contains("[FAIL]"));
    assert_eq!(text.matches("[ok]").count(), 17);
}

#[test]
fn nilpotency_below_two_is_refused() {
    let out = weylseries(&["comm", "--group", "A1", "--tmax", "2", "--nilpotency", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("nilpotency"));
}

#[test]
fn environment_variables_and_flags_agree_on_precedence() {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_weylseries"));
    cmd.env("WEYLSERIES_ENUM_LIMIT", "10")
        .args(["hom", "--group", "G2", "--n", "1"]);
    let out = cmd.output().unwrap();
    assert_eq!(out.status.code(), Some(2), "G2 has 12 > 10 elements");

    let mut cmd = Command::new(env!("CARGO_BIN_EXE_weylseries"));
    cmd.env("WEYLSERIES_ENUM_LIMIT", "10")
        .args(["hom", "--group", "G2", "--n", "1", "--enum-limit", "12"]);
    let out = cmd.output().unwrap();
    assert_eq!(out.status.code(), Some(0), "flag outranks the environment");

    let mut cmd = Command::new(env!("CARGO_BIN_EXE_weylseries"));
    cmd.env("WEYLSERIES_NCAP", "not a number")
        .args(["hom", "--group", "A1", "--n", "1"]);
    let out = cmd.output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("WEYLSERIES_NCAP"));
}

#[test]
fn out_flag_writes_the_payload_file(){
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u2.txt");
    let out = weylseries(&[
        "hom", "--group", "U(2)", "--n", "3", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "", "payload goes to the file, not stdout");
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "1 + 3q + 6q^2 + 13q^3 + 18q^4 + 13q^5 + 6q^6 + 3q^7 + q^8\n"
    );
    assert!(Path::new(&path).exists());
}
