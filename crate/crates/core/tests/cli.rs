use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use wellcovered::graph::Graph;
use wellcovered::graph6::{from_graph6, to_graph6_string};
use wellcovered::hkqm::build_hkqm;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wellcovered"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn construct_h132() {
    let dir = tempfile::tempdir().unwrap();
    let labels = dir.path().join("labels.json");
    let o = run(&["construct", "-k", "1", "-q", "3", "-m", "2", "--labels", labels.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    assert_eq!(line.trim(), to_graph6_string(&build_hkqm(1, 3, 2).unwrap()));
    assert_eq!(from_graph6(line.trim().as_bytes()).unwrap().n(), 12);
    let labels: Value = serde_json::from_str(&std::fs::read_to_string(labels).unwrap()).unwrap();
    assert_eq!(labels.as_array().unwrap().len(), 12);
    assert_eq!(labels[0], serde_json::json!([1, [1, 1]]));
}

#[test]
fn construct_two_triangles() {
    let o = run(&["construct", "-k", "0", "-q", "3", "-m", "2"], None);
    let g = from_graph6(stdout(&o).trim().as_bytes()).unwrap();
    assert_eq!(g, Graph::complete(3).disjoint_copies(2));
}

#[test]
fn construct_budget() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.g6");
    let o = run(&["construct", "-k", "1", "-q", "5", "-m", "10", "--out", out.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(from_graph6(std::fs::read_to_string(&out).unwrap().trim().as_bytes()).unwrap().n(), 50_000);

    let o = run(&["construct", "-k", "1", "-q", "5", "-m", "100"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("500000000"));
}

#[test]
fn check_modes() {
    let o = run(&["check", "--mode", "indpoly"], Some("Bw\n"));
    assert_eq!(stdout(&o).trim(), "[1,3]");

    let kneser = to_graph6_string(&Graph::kneser(8, 2).unwrap());
    let o = run(&["check", "--mode", "property-p", "-k", "2", "-q", "4", "-m", "3"], Some(&kneser));
    assert_eq!(o.status.code(), Some(0));
    let rep = json(&o);
    assert_eq!(rep["holds"], true);
    assert_eq!(rep["maximal_cliques"], 105);

    let o = run(&["check", "--mode", "property-p", "-k", "2"], Some(&kneser));
    assert_eq!(o.status.code(), Some(4));

    let path = to_graph6_string(&Graph::path(3));
    let o = run(&["check", "--mode", "mt"], Some(&path));
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not well-covered"));

    let o = run(&["check", "--mode", "wellcovered"], Some(&path));
    assert_eq!(json(&o)["is_well_covered"], false);

    let o = run(&["check", "--mode", "indpoly"], Some("B!\n"));
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn plan_command() {
    let o = run(&["plan", "--target", "3,11,10", "--epsilon", "1/3"], None);
    assert_eq!(o.status.code(), Some(0));
    let plan = json(&o);
    assert_eq!(plan["m"], 58);
    assert_eq!(plan["deviations"][1], "19/58");
    assert_eq!(plan["certified"], true);

    let o = run(&["plan", "--target", "3,11,10", "--m", "3"], None);
    assert_eq!(json(&o)["certified"], false);

    let o = run(&["plan", "--target", "2,0"], None);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["plan", "--target", "3,11,10", "--mcap", "40"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["plan", "--target", "3,11,10", "--epsilon", "0"], None);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn realize_command() {
    let o = run(&["realize", "-q", "3", "--pi", "3,2"], None);
    assert_eq!(o.status.code(), Some(0));
    let rep = json(&o);
    assert_eq!(rep["ordering_verified"], true);
    assert_eq!(rep["ordering"], serde_json::json!([3, 2]));
    assert_eq!(rep["materialized"], false);
    assert!(rep["counts"][0].is_string());

    let o = run(&["realize", "-q", "4", "--pi", "4,2,3"], None);
    assert_eq!(json(&o)["ordering_verified"], true);

    let o = run(&["realize", "-q", "3", "--pi", r#"{"2":3,"3":2}"#], None);
    assert_eq!(json(&o)["ordering"], serde_json::json!([3, 2]));

    let o = run(&["realize", "-q", "3", "--pi", "2,2"], None);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not a bijection"));
}

#[test]
fn realize_materialized() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("g.g6");
    let o = run(&["realize", "-q", "2", "--pi", "2,1", "--graph-out", g6.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let rep = json(&o);
    assert_eq!(rep["materialized"], true);
    let text = std::fs::read_to_string(&g6).unwrap();
    assert_eq!(text.trim(), rep["graph6"].as_str().unwrap());

    let o = run(&["check", "--mode", "mt", g6.to_str().unwrap()], None);
    assert_eq!(json(&o)["holds"], true);
}

#[test]
fn usage_and_help() {
    assert_eq!(run(&["--help"], None).status.code(), Some(0));
    assert_eq!(run(&["nonsense"], None).status.code(), Some(4));
    assert_eq!(run(&["construct", "-k", "x"], None).status.code(), Some(4));
    assert_eq!(run(&["construct", "-k", "3", "-q", "3", "-m", "2"], None).status.code(), Some(4));
}

#[test]
fn selftest_is_deterministic() {
    let a = run(&["selftest", "--seed", "11", "--rounds", "20"], None);
    let b = run(&["selftest", "--seed", "11", "--rounds", "20"], None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(json(&a)["indpoly_vs_brute_force"], 20);
}
