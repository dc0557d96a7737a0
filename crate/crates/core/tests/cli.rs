//! End-to-end runs of the command-line tool.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coarse-geom"))
}

fn run(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).env_remove("COARSE_GEOM_VERTEX_CAP").output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn ball_report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ball.json");
    let (code, _) = run(&["ball", "--group", "f2.json", "--radius", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v = json(&std::fs::read_to_string(out).unwrap());
    assert_eq!(v["vertex_count"], 53);
}

#[test]
fn group_file_is_read() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/groups/z2.json");
    let (code, text) = run(&["ball", "--group", path, "--radius", "4"]);
    assert_eq!(code, 0);
    assert_eq!(json(&text)["vertex_count"], 41);
}

#[test]
fn coends_verdict() {
    let (code, text) = run(&["coends", "--group", "z2.json", "--subgroup", "a", "--schedule", "1:20,2:30,3:40"]);
    assert_eq!(code, 0);
    assert_eq!(json(&text)["verdict"], "stable(2)");
}

#[test]
fn fbc_negative_verdict() {
    let (code, text) = run(&["fbc", "--rank", "2", "--aut", r#"{"a":"ab","b":"a"}"#, "--kmax", "16"]);
    assert_eq!(code, 0);
    let v = json(&text);
    assert_eq!(v["outcome"], "not_virtually_direct_up_to_bound");
    assert_eq!(v["certificates"].as_array().unwrap().len(), 16);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["ball", "--group", "nowhere", "--radius", "2"]).0, 2);
    assert_eq!(run(&["ball", "--group", "f2", "--radius", "2", "--bogus"]).0, 2);
    assert_eq!(run(&["coends", "--group", "z2", "--subgroup", "a", "--schedule", "1:30,2:20"]).0, 2);
    assert_eq!(run(&["qline", "--group", "f2", "--subgroup", "q", "--radius", "3"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn budget_exits_3() {
    let out = bin()
        .args(["ball", "--group", "f2", "--radius", "6"])
        .env("COARSE_GEOM_VERTEX_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["--vertex-cap", "100", "ball", "--group", "f2", "--radius", "6"]).0, 3);
}

#[test]
fn reports_are_deterministic() {
    let args = ["comm", "--group", "z2", "--subgroup", "a", "--radii", "4,6,8"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let args = ["qline", "--group", "f2", "--subgroup", "ab", "--radius", "6", "--r", "1"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn other_subcommands_run() {
    let cases: [&[&str]; 7] = [
        &["distortion", "--src", "z", "--dst", "f2", "--map", r#"{"kind":"homomorphism","images":{"a":"aa"}}"#, "--src-radius", "5", "--dst-radius", "10", "--inverse"],
        &["rips", "--group", "z", "--radius", "10", "--subgroup", "aa", "--d", "1,2"],
        &["fg-probe", "--group", "f2", "--radius", "5", "--generators", "aa,b", "--a0", "3"],
        &["pushforward", "--src", "f2", "--dst", "f2", "--map", r#"{"kind":"homomorphism","images":{"a":"b","b":"a"}}"#, "--src-radius", "6", "--dst-radius", "6", "--subgroup", "a", "--margin", "1"],
        &["coset-metric", "--group", "f2xz", "--subgroup", "t", "--radius", "6", "--members", "e,a,b"],
        &["constants", "--n", "1", "--m", "2", "--r2", "25", "--x2", "3"],
        &["suite", "--only", "12"],
    ];
    for args in cases {
        let (code, text) = run(args);
        assert_eq!(code, 0, "{:?}", args);
        let v = json(&text);
        assert!(v.is_object());
    }
    let (_, text) = run(&["rips", "--group", "z", "--radius", "10", "--subgroup", "aa", "--d", "1,2"]);
    let v = json(&text);
    assert_eq!(v["levels"][0]["component_count"], 11);
    assert_eq!(v["levels"][1]["component_count"], 1);
}

#[test]
fn csv_and_dot_outputs() {
    let (code, text) = run(&["coends", "--group", "z2", "--subgroup", "a", "--schedule", "1:10,2:12", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(text.lines().count() >= 3);
    let (code, text) = run(&["ball", "--group", "z", "--radius", "2", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("graph ball {"));
    assert_eq!(run(&["fbc", "--rank", "2", "--aut", r#"{"a":"b","b":"a"}"#, "--format", "dot"]).0, 2);
}
