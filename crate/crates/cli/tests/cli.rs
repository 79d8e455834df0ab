use std::process::{Command, Output};

use thrall_core::domino::DominoTableau;
use thrall_core::symfunc::SchurExpansion;
use thrall_core::StandardTableau;

fn thrall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thrall")).args(args).env_remove("THRALL_NMAX").output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn expand_both_methods_agree() {
    let out = thrall(&["expand", "--lambda", "4,2", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out).trim(),
        "s_{4,2} + s_{4,1,1} + 2 s_{3,2,1} + 2 s_{3,1,1,1} + s_{2,2,2} + s_{2,2,1,1} + s_{2,1,1,1,1}"
    );
}

#[test]
fn expand_two_equal_rows_from_tableaux() {
    let out = thrall(&["expand", "--lambda", "3,3", "--method", "tableau"]);
    assert_eq!(stdout(&out).trim(), "s_{4,2} + s_{3,2,1} + s_{3,1,1,1} + s_{2,2,2}");
}

#[test]
fn expand_empty_partition() {
    let out = thrall(&["expand", "--lambda", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn exit_codes() {
    assert_eq!(thrall(&["expand", "--lambda", "4,x"]).status.code(), Some(2));
    assert_eq!(thrall(&["expand", "--lambda", "2,3"]).status.code(), Some(2));
    assert_eq!(thrall(&["trace-xi", "--tableau", "1 2 3/4"]).status.code(), Some(2));
    let unsolved = thrall(&["expand", "--lambda", "3,3,3", "--method", "tableau"]);
    assert_eq!(unsolved.status.code(), Some(3));
    assert!(stdout(&unsolved).contains("no tableau formula known"));
    assert_eq!(thrall(&["expand", "--lambda", "3,3,3", "--method", "oracle"]).status.code(), Some(0));
}

#[test]
fn thrall_witness() {
    let out = thrall(&["thrall", "--lambda", "3,3", "--mu", "4,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1], "1 3 4 6/2 5");
}

#[test]
fn thrall_json_round_trip() {
    let out = thrall(&["thrall", "--lambda", "3,3", "--mu", "4,2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["lambda"], "3,3");
    assert_eq!(v["count"], 1);
    let t: StandardTableau = serde_json::from_value(v["witnesses"][0].clone()).unwrap();
    assert_eq!(t.to_string(), "1 3 4 6/2 5");
}

#[test]
fn trace_xi_spin() {
    let out = thrall(&["trace-xi", "--tableau", "1 2 4 7 9/3 5 10/6 8"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["spin"], "3");
    let result: DominoTableau = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(result.weight(), vec![5, 3, 2]);
    let ascii = stdout(&thrall(&["trace-xi", "--tableau", "1 2 4 7 9/3 5 10/6 8", "--ascii"]));
    assert_eq!(ascii.lines().last(), Some("spin 3"));
}

#[test]
fn enumerate_ydt_contains_final_frame() {
    let out = thrall(&["enumerate", "--kind", "ydt", "--shape", "6,6,4,4", "--weight", "5,3,2"]);
    assert!(stdout(&out).lines().any(|l| l
        == "6,6,4,4/0 [{(1,1),(2,1)}:1 {(1,2),(2,2)}:1 {(1,3),(2,3)}:1 {(1,4),(2,4)}:1 {(1,5),(1,6)}:1 \
            {(2,5),(2,6)}:2 {(3,1),(4,1)}:2 {(3,2),(3,3)}:2 {(3,4),(4,4)}:3 {(4,2),(4,3)}:3]"));
    let json = thrall(&["enumerate", "--kind", "ydt", "--shape", "6,6,4,4", "--weight", "5,3,2", "--json"]);
    let all: Vec<DominoTableau> = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(all.len(), stdout(&out).lines().count());
}

#[test]
fn expand_json_round_trip() {
    let out = thrall(&["expand", "--lambda", "4,2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["matched"], true);
    let e: SchurExpansion = serde_json::from_value(v["oracle"].clone()).unwrap();
    assert_eq!(e.coefficient(&"3,2,1".parse().unwrap()), 2);
}

#[test]
fn verify_suite_small_depth() {
    let out = thrall(&["verify", "--nmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 8);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn depth_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_thrall"))
        .args(["verify", "--json"])
        .env("THRALL_NMAX", "3")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v[3]["detail"].as_str().unwrap().contains("up to n = 3"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["expand", "--lambda", "3,3,1", "--json"][..],
        &["enumerate", "--kind", "syt-lambda", "--shape", "4,2", "--lambda", "4,2"][..],
        &["verify", "--lambda", "4,4"][..],
        &["verify", "--nmax", "4", "--json"][..],
    ] {
        assert_eq!(thrall(args).stdout, thrall(args).stdout);
    }
}
