mod common;

use std::path::PathBuf;
use std::process::{Command, Output};

use common::fixture;
use whakit_cli::report::RunReport;

fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("whakit-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn whakit(dir: &PathBuf, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whakit")).args(args).current_dir(dir).output().unwrap()
}

#[test]
fn check_writes_the_state_file_and_report_replays_it() {
    let dir = scratch("state");
    let out = whakit(&dir, &["check", "sweedler"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).ends_with("PASS\n"));
    let text = std::fs::read_to_string(dir.join(".whakit/last_report.json")).unwrap();
    let report: RunReport = serde_json::from_str(&text).unwrap();
    assert!(report.passed);
    assert_eq!(report.command, ["check", "sweedler"]);
    assert_eq!(report.inputs[0].source, "catalog:sweedler");
    let replay = whakit(&dir, &["report", "--format", "json"]);
    assert_eq!(replay.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&replay.stdout), text);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn json_output_is_deterministic() {
    let dir = scratch("json");
    let a = whakit(&dir, &["check", &fixture("face_2.json"), "--format", "json"]);
    let b = whakit(&dir, &["check", &fixture("face_2.json"), "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let report: RunReport = serde_json::from_slice(&a.stdout).unwrap();
    assert!(report.timings.is_none());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn input_errors_exit_with_two() {
    let dir = scratch("input");
    assert_eq!(whakit(&dir, &["check", "nosuch"]).status.code(), Some(2));
    assert_eq!(whakit(&dir, &["face", "--n", "1"]).status.code(), Some(2));
    assert_eq!(whakit(&dir, &["face-galois", "--n", "2", "--component", "0", "--param", "0"]).status.code(), Some(2));
    assert_eq!(whakit(&dir, &["face-galois", "--n", "2", "--component", "5", "--param", "1"]).status.code(), Some(2));
    assert_eq!(whakit(&dir, &["bogus"]).status.code(), Some(2));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn missing_r_inverse_needs_the_solve_flag() {
    let dir = scratch("rbar");
    let text = std::fs::read_to_string(fixture("sweedler.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v.as_object_mut().unwrap().remove("r_inverse");
    let path = dir.join("sweedler_no_rbar.json");
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let p = path.to_string_lossy();
    assert_eq!(whakit(&dir, &["check", &p]).status.code(), Some(2));
    assert_eq!(whakit(&dir, &["check", &p, "--solve-r-bar"]).status.code(), Some(0));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn emitted_face_galois_object_checks() {
    let dir = scratch("emit");
    let out = whakit(&dir, &["face-galois", "--n", "2", "--component", "1", "--param", "-1", "-o", "a.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(whakit(&dir, &["galois", "check", "a.json"]).status.code(), Some(0));
    let cot = whakit(&dir, &["cotensor", "a.json", "a.json", "-o", "aa.json"]);
    assert_eq!(cot.status.code(), Some(0));
    assert_eq!(whakit(&dir, &["galois", "check", "aa.json"]).status.code(), Some(0));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn timings_are_opt_in() {
    let dir = scratch("timings");
    let out = whakit(&dir, &["check", "group_zn:3", "--timings", "--format", "json"]);
    let report: RunReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.timings.is_some_and(|t| !t.is_empty()));
    std::fs::remove_dir_all(dir).unwrap();
}
