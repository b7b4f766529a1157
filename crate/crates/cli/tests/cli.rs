use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fivecycle")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn gen_to(dir: &Path, name: &str, family: &[&str]) -> String {
    let mut args = vec!["gen"];
    args.extend_from_slice(family);
    let o = run(&args);
    assert!(o.status.success());
    let path = dir.join(name);
    std::fs::write(&path, &o.stdout).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn solve_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let graph = gen_to(dir.path(), "chain.g6", &["chain", "1"]);
    let json = dir.path().join("out.json");
    let json_s = json.to_string_lossy();
    let o = run(&["solve5", &graph, "--json", &json_s]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("achieved=4"));

    let o = run(&["verify", &graph, &json_s]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("line1 ok"));

    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    v[0]["certificate"]["achieved"] = serde_json::json!(1);
    std::fs::write(&json, serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(run(&["verify", &graph, &json_s]).status.code(), Some(2));
}

#[test]
fn oddness_with_trace() {
    let dir = tempfile::tempdir().unwrap();
    let graph = gen_to(dir.path(), "flower.g6", &["flower", "7"]);
    let json = dir.path().join("odd.json");
    let o = run(&["oddness", &graph, "--emit-trace", "--json", &json.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert!(v[0]["trace"].is_object());
    assert_eq!(v[0]["certificate"]["theorem"], "T1-oddness");
}

#[test]
fn bad_input_exits_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    std::fs::write(&path, "this is not graph6\n").unwrap();
    let o = run(&["solve5", &path.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(run(&["gen", "nope"]).status.code(), Some(1));
    assert_eq!(run(&["solve5", "/nonexistent/file.g6"]).status.code(), Some(1));
}

#[test]
fn batch_runs() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.g6");
    std::fs::write(&empty, "").unwrap();
    let o = run(&["batch", &empty.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(0));

    let json = dir.path().join("report.json");
    let o = run(&["batch", "chain:1..3", "--json", &json.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for k in 1..=3 {
        assert!(out.contains(&format!("chain:{k} n={}", 30 * k + 2)));
    }
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["rows"][2]["achieved5"], 12);
}

#[test]
fn reduce_and_patterns() {
    let dir = tempfile::tempdir().unwrap();
    let graph = gen_to(dir.path(), "ring.g6", &["p3ring", "2"]);
    let o = run(&["reduce", &graph, "--format", "cubicmg"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n=18 -> 18 Generic"));
    let o = run(&["patterns", &graph]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("P3=2"));
    let o = run(&["oracle", &graph]);
    assert!(stdout(&o).contains("omega5=0 omega=2"));
}
