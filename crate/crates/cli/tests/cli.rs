use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn corona(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_corona"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

const C5: &str = "0 1\n1 2\n2 3\n3 4\n4 0\n";
const BOWTIE: &str = "0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n";
const K4: &str = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

#[test]
fn analyze_c5() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c5.txt", C5);
    let (code, stdout, _) = corona(&["analyze", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["mu"], 2);
    assert_eq!(v["k_observed"], 1);
    assert_eq!(v["k_predicted"], 1);
    assert_eq!(v["core"], serde_json::json!([]));
    assert_eq!(v["corona"], serde_json::json!([0, 1, 2, 3, 4]));
    assert_eq!(v["profile"]["kind"], "OneOddCycle");
}

#[test]
fn analyze_text_output() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bowtie.txt", BOWTIE);
    let (code, stdout, _) = corona(&["analyze", file.to_str().unwrap(), "--out", "text"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("alpha = 2"));
    assert!(stdout.contains("shared vertex 2"));
}

#[test]
fn dimacs_and_json_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let dimacs = write(dir.path(), "c5.col", "c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    let json = write(dir.path(), "c5.json", r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]}"#);
    let edges = write(dir.path(), "c5.txt", C5);
    let a = corona(&["analyze", dimacs.to_str().unwrap(), "--format", "dimacs"]);
    let b = corona(&["analyze", json.to_str().unwrap(), "--format", "json"]);
    let c = corona(&["analyze", edges.to_str().unwrap()]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    assert_eq!(b.1, c.1);
}

#[test]
fn out_of_class_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k4.txt", K4);
    let (code, stdout, stderr) = corona(&["analyze", file.to_str().unwrap()]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["error"], "out_of_class");
    assert!(!stderr.is_empty());
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bad.txt", "0 1\n1 2 3\n");
    let (code, stdout, _) = corona(&["analyze", file.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stdout.contains("parse_error"));

    let loop_file = write(dir.path(), "loop.txt", "0 0\n");
    assert_eq!(corona(&["analyze", loop_file.to_str().unwrap()]).0, 2);

    let (code, _, _) = corona(&["analyze", "/nonexistent/graph.txt"]);
    assert_eq!(code, 2);
    assert_eq!(corona(&["frobnicate"]).0, 2);
}

#[test]
fn verify_passes_and_catches_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let bowtie = write(dir.path(), "bowtie.txt", BOWTIE);
    let (code, stdout, _) = corona(&["verify", bowtie.to_str().unwrap()]);
    assert_eq!(code, 0, "{stdout}");
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["all_match"], true);

    let (code, stdout, _) = corona(&["verify", bowtie.to_str().unwrap(), "--corrupt-core"]);
    assert_eq!(code, 3);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["all_match"], false);
}

#[test]
fn verify_generated_share_path_instance() {
    let dir = tempfile::tempdir().unwrap();
    let (code, text, _) = corona(&["gen", "--pattern", "share-path", "--n", "14", "--seed", "7", "--format", "edgelist"]);
    assert_eq!(code, 0);
    let file = write(dir.path(), "g.txt", &text);
    let (code, stdout, _) = corona(&["verify", file.to_str().unwrap(), "--out", "text"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.ends_with("all match\n"));
}

#[test]
fn verify_refuses_graphs_beyond_the_oracle_limit() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c5.txt", C5);
    let (code, stdout, _) = corona(&["verify", file.to_str().unwrap(), "--oracle-limit", "4"]);
    assert_eq!(code, 2);
    assert!(stdout.contains("too_large"));
    assert_eq!(corona(&["verify", file.to_str().unwrap(), "--oracle-limit", "26"]).0, 2);
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "--pattern", "disjoint-connected", "--n", "20", "--p", "0.3", "--seed", "11"];
    let a = corona(&args);
    let b = corona(&args);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    let other = corona(&["gen", "--pattern", "disjoint-connected", "--n", "20", "--p", "0.3", "--seed", "12"]);
    assert_ne!(a.1, other.1);
    let bad = corona(&["gen", "--pattern", "one-odd", "--n", "5", "--p", "1.5"]);
    assert_eq!(bad.0, 2);
    assert!(bad.1.contains("bad_parameters"));
}

#[test]
fn json_output_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bowtie.txt", BOWTIE);
    let first = corona(&["analyze", file.to_str().unwrap()]);
    let second = corona(&["analyze", file.to_str().unwrap()]);
    assert_eq!(first, second);
    assert_eq!(
        first.1,
        concat!(
            r#"{"n":5,"m":6,"alpha":2,"mu":2,"core":[],"corona":[0,1,3,4],"k_observed":0,"#,
            r#""k_predicted":0,"k_unresolved":false,"partition_holds":false,"L":[],"Lc":[0,1,2,3,4],"#,
            r#""J":[],"d":0,"profile":{"kind":"TwoSharingVertex","cycles":[[0,1,2],[2,3,4]],"#,
            r#""intersection":[2],"cut_vertex":2}}"#,
            "\n"
        )
    );
}

#[test]
fn selftest_passes() {
    let (code, stdout, _) = corona(&["selftest"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("self-test passed"));
    let (code, stdout, _) = corona(&["selftest", "--out", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["passed"], true);
}
