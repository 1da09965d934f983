use std::path::Path;
use std::process::{Command, Output};

use q1lab::Graph;

fn q1lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_q1lab")).args(args).env_remove("Q1LAB_EQ_TOL").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

#[test]
fn eval_table_rows() {
    let o = q1lab(&["eval", "--family", "turan:10,3", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for v in ["13.2915", "13.7082", "13.6119", "13.6667", "13.5826"] {
        assert!(text.contains(v), "{v} missing:\n{text}");
    }

    let o = q1lab(&["eval", "--edges", &data("g2.txt"), "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for v in ["8.7417", "9.2749", "9.5826", "9.4462", "9.6667", "8.8284"] {
        assert!(text.contains(v), "{v} missing:\n{text}");
    }
}

#[test]
fn eval_formats() {
    let o = q1lab(&["eval", "--graph6", "A_", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["q1"].as_f64().unwrap() - 2.0).abs() < 1e-12);
    for key in ["b5", "b13", "b14", "b15", "b16", "lb"] {
        assert!(v["bounds"][key]["value"].is_number(), "{key}");
    }

    let o = q1lab(&["eval", "--family", "kite:6,3", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,m,omega,chi,q1,b5,b13,b14,b15,b16,lb");
    assert_eq!(lines.next().unwrap().split(',').count(), 11);
}

#[test]
fn eval_disconnected_warns() {
    let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let o = q1lab(&["eval", "--graph6", &g.to_graph6()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    assert!(stdout(&o).contains("n/a"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(q1lab(&["eval", "--graph6", "!!"]).status.code(), Some(2));
    assert_eq!(q1lab(&["eval"]).status.code(), Some(2));
    assert_eq!(q1lab(&["eval", "--family", "turan:3,9"]).status.code(), Some(2));
    assert_eq!(q1lab(&["eval", "--edges", "/nonexistent/file.txt"]).status.code(), Some(2));
    assert_eq!(q1lab(&["sweep", "--n", "9"]).status.code(), Some(2));
    assert_eq!(q1lab(&["sweep", "--n", "5", "--check", "region"]).status.code(), Some(2));
    assert_eq!(q1lab(&["frobnicate"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_q1lab")).args(["table"]).env("Q1LAB_EQ_TOL", "-1").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn violation_exits_one() {
    // a tolerance of 0.5 makes non-extremal graphs count as attaining the
    // clique bound, which the sweep reports as a falsified characterization
    let o = Command::new(env!("CARGO_BIN_EXE_q1lab"))
        .args(["sweep", "--n", "4", "--check", "upper", "--format", "json"])
        .env("Q1LAB_EQ_TOL", "0.5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["violation"]["graph6"].is_string());
    assert!(v["violation"]["report"]["bounds"]["b5"].is_object());
}

#[test]
fn sweep_upper_six() {
    let o = q1lab(&["sweep", "--n", "6", "--check", "upper", "--workers", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("no violations"));
    assert!(text.contains("turan:6,3"));

    let o = q1lab(&["sweep", "--n", "5", "--check", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["connected"], 728);
    assert!(text.lines().count() > 1);

    let o = q1lab(&["sweep", "--n", "5", "--check", "lower", "--format", "csv"]);
    assert!(stdout(&o).starts_with("check,id,mask,"));

    let o = q1lab(&["sweep", "--n", "6", "--dedup", "--check", "upper"]);
    assert!(stdout(&o).contains("112 connected graphs"));
}

#[test]
fn counterexamples_and_table() {
    let o = q1lab(&["counterexamples", "--n-max", "14"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("17.5208"));
    assert!(text.contains("6 certificates"));

    let o = q1lab(&["counterexamples", "--extremal", "--format", "csv"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("9,cpmtri:9")));

    let o = q1lab(&["table", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.contains("T(10,3),13.2915,13.2915,13.7082,13.6119,13.6667,13.5826"));
    assert!(text.contains("8.7417,9.2749,9.5826,9.4462,9.6667,8.8284"));
}

#[test]
fn family_output() {
    let o = q1lab(&["family", "kite:7,4", "--format", "g6"]);
    assert_eq!(o.status.code(), Some(0));
    let g = Graph::from_graph6(stdout(&o).trim()).unwrap();
    assert_eq!(g.m(), 9);
    assert_eq!(g, q1lab::families::kite(7, 4).unwrap());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.txt");
    let o = q1lab(&["family", "turan:7,3", "--format", "edges", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let g = Graph::from_edge_list(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(g.is_turan(3));
}

#[test]
fn zykov_trajectory() {
    let o = q1lab(&["zykov", "--family", "kite:7,4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let q: Vec<f64> = v["q1"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert!(q.windows(2).all(|w| w[1] >= w[0] - 1e-9));
    let last = Graph::from_graph6(v["graphs"].as_array().unwrap().last().unwrap().as_str().unwrap()).unwrap();
    assert!(last.multipartite_parts().is_some());

    let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(q1lab(&["zykov", "--graph6", &g.to_graph6()]).status.code(), Some(2));
}
