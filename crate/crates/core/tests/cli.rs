// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_whitehead")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn word_commands() {
    assert_eq!(stdout(&["reduce", "abBa"]), "aa\n");
    assert_eq!(stdout(&["reduce", "1 2 -2 1"]), "aa\n");
    assert_eq!(stdout(&["mul", "ab^2", "bc^2"]), "abbbcc\n");
    assert_eq!(stdout(&["conjugate", "abbA", "bb"]), "true\n");
    assert_eq!(stdout(&["conjugate", "ab", "aB"]), "false\n");
}

#[test]
fn graph_commands() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("w.dot");
    let out = stdout(&["wgraph", "abba", "--rank", "2", "--dot", dot.to_str().unwrap()]);
    assert_eq!(out.lines().filter(|l| l.contains("--")).count(), 4);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph whitehead {"));
    assert_eq!(text.matches("--").count(), 4);

    let out = stdout(&["cutvertex", "ababa", "--rank", "2"]);
    assert!(out.contains("cut_vertex: e1\n"));
    assert!(out.contains("separable: true"));
    let out = stdout(&["cutvertex", "abba", "--rank", "2"]);
    assert!(out.contains("cut_vertex: none") && out.contains("separable: false"));
}

#[test]
fn primitivity_commands() {
    assert_eq!(stdout(&["primitive", "ababa", "--rank", "2"]), "true\n");
    assert_eq!(stdout(&["primitive", "aabb", "--rank", "2"]), "false\n");
    let out = stdout(&["primitive", "ababa", "--rank", "2", "--trace"]);
    let json: String = out.lines().take_while(|l| *l != "true").collect::<Vec<_>>().join("\n");
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["steps"].as_array().unwrap().len(), 3);
    assert_eq!(stdout(&["nielsen", "a", "ba"]), "true\n");
    assert_eq!(stdout(&["nielsen", "aa", "b"]), "false\n");
}

#[test]
fn subgroup_commands() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("h.dot");
    let json = dir.path().join("h.json");
    let out =
        stdout(&["fold", "--rank", "2", "abb", "b", "--dot", dot.to_str().unwrap(), "--json", json.to_str().unwrap()]);
    assert!(out.contains("whole group: true"));
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("digraph subgroup {"));
    let dump: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(dump["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(dump["edges"].as_array().unwrap().len(), 2);

    assert_eq!(stdout(&["member", "--rank", "3", "--subgroup", "abb", "bcc", "a"]), "false\n");
    assert_eq!(stdout(&["member", "--rank", "3", "--subgroup", "abb", "bcc", "abbbcc"]), "true\n");
    assert_eq!(stdout(&["member", "--rank", "2", "aaa", "--subgroup", "a"]), "true\n");
}

#[test]
fn density_command() {
    let out = stdout(&["density", "--rank", "2", "--max-len", "3"]);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[1], "1\t4\t4\t1.000000");
    assert!(rows[2].starts_with("2\t8\t12\t"));
}

#[test]
fn verify_command_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = run(&["verify", "npbig", "--rank", "2", "--max-len", "4", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let r = &reports[0];
    assert_eq!(r["claim_id"], "npbig");
    assert_eq!(r["status"], "pass");
    assert_eq!(r["stats"]["words_checked"], 161);
    assert!(r["stats"]["seconds"].is_null());
    assert_eq!(r["parameters"]["rank"], 2);

    let out = run(&["verify", "section3", "--truncation", "3", "--timings"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("seconds="));

    // usage errors
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "npbig", "--rank", "7"]).status.code(), Some(2));
    assert_eq!(run(&["reduce", "ab?"]).status.code(), Some(2));
    assert_eq!(run(&["primitive", "abc", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}
