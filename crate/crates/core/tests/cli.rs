use std::process::{Command, Output};

use serde_json::Value;

fn partgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn local_rejects_nonpositive_parts() {
    let out = partgraph(&["local", "0,3"]);
    assert!(!out.status.success());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("positive"));
}

#[test]
fn graph_dot_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g4.dot");
    let out = partgraph(&[
        "graph",
        "4",
        "--format",
        "dot",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 5);
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 5);
    assert!(dot.contains("[label=\"2,1,1\"]"));
}

#[test]
fn graph_json() {
    let g1 = json_of(&partgraph(&["graph", "1", "--format", "json"]));
    assert_eq!(g1["labels"].as_array().unwrap().len(), 1);
    assert!(g1["edges"].as_array().unwrap().is_empty());

    let g7 = json_of(&partgraph(&["graph", "7", "--format", "json"]));
    assert_eq!(g7["labels"].as_array().unwrap().len(), 15);
    assert_eq!(g7["labels"][0], serde_json::json!([7]));
}

#[test]
fn unwritable_output_fails() {
    let out = partgraph(&["graph", "3", "--output", "/nonexistent-dir/x/g.dot"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot write"));
}

#[test]
fn neighborhoods() {
    for (p, vertices, edges) in [("4,4,2,2", 6, 9), ("5", 1, 0), ("2,2", 2, 1)] {
        let v = json_of(&partgraph(&["neighborhood", p, "--format", "json"]));
        assert_eq!(
            v["neighborhood"]["labels"].as_array().unwrap().len(),
            vertices,
            "{p}"
        );
        assert_eq!(
            v["neighborhood"]["edges"].as_array().unwrap().len(),
            edges,
            "{p}"
        );
        assert_eq!(v["line_graph"]["edges"], v["neighborhood"]["edges"], "{p}");
        assert_eq!(v["verified"], true);
    }
    let text = partgraph(&["neighborhood", "2,2"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("verified"));
}

#[test]
fn cliques_command() {
    let v = json_of(&partgraph(&["cliques", "2,2,4,4", "--format", "json"]));
    assert_eq!(v["cliques"].as_array().unwrap().len(), 5);
    assert_eq!(v["omega_loc_search"], 4);
    assert_eq!(v["omega_loc_formula"], 4);
}

#[test]
fn partitions_command() {
    let out = partgraph(&["partitions", "4"]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "4\n3,1\n2,2\n2,1,1\n1,1,1,1\n"
    );
    assert!(!partgraph(&["partitions", "0"]).status.success());
}

#[test]
fn verify_exit_codes() {
    let v = json_of(&partgraph(&["verify", "--nmax", "12"]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["n_range"], serde_json::json!([1, 12]));

    let v = json_of(&partgraph(&["verify", "--nmax", "1"]));
    assert_eq!(v["pass"], true);

    let v = json_of(&partgraph(&["verify", "--nmax", "20", "--degrees-only"]));
    assert_eq!(v["pass"], true);
    assert_eq!(v["checks"][0]["examined"], 2713);

    assert!(!partgraph(&["verify", "--nmax", "0"]).status.success());
}
