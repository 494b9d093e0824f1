use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aicrystal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_json_round_trips() {
    let o = run(&["enumerate", "--n", "3", "--shape", "2", "--ai"]);
    assert!(o.status.success());
    let v: Vec<aicrystal::Tableau> = serde_json::from_str(&stdout(&o)).unwrap();
    let text: Vec<String> = v.iter().map(ToString::to_string).collect();
    assert_eq!(text, ["12", "13", "22", "23", "33"]);
    let o = run(&["enumerate", "--n", "3", "--shape", "2,1", "--format", "text"]);
    assert_eq!(stdout(&o).lines().count(), 8);
}

#[test]
fn graph_outputs() {
    let dot = stdout(&run(&["graph", "--n", "3", "--shape", "2,1"]));
    assert!(dot.starts_with("digraph crystal {"));
    assert_eq!(dot.matches(" -> ").count(), 8);
    let dot = stdout(&run(&["graph", "--n", "3", "--shape", "2,1", "--ai"]));
    assert_eq!(dot.matches(" -- ").count(), 6);
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["graph", "--n", "4", "--shape", "1", "--ai", "--format", "json"])))
            .unwrap();
    assert_eq!(json["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(json["directed"], false);
}

#[test]
fn characters() {
    assert_eq!(stdout(&run(&["char", "--n", "3", "--shape", "1", "--ai"])), "y1 + 1 + y1^-1\n");
    assert_eq!(stdout(&run(&["char", "--n", "4", "--shape", "1", "--ai"])), "y1 + y1^-1 + y3 + y3^-1\n");
    assert_eq!(stdout(&run(&["char", "--n", "4", "--shape", "1"])), "x1 + x2 + x3 + x4\n");
}

#[test]
fn rs_and_rsai_transcripts() {
    let out = stdout(&run(&["rs", "--word", "4,2,3,1,3,2"]));
    assert!(out.ends_with("P = 123/23/4\nQ = 135/26/4\n"));
    let out = stdout(&run(&["rsai", "--n", "5", "--word", "1,1,4,2,1"]));
    assert!(out.contains("P^AI = 3/5\n"), "{out}");
    assert!(out.contains("Q^AI = (3/4, {{1,2},{5}})"), "{out}");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["rsai", "--n", "4", "--word", "1,1,4,2,1,1,1", "--format", "json"])))
            .unwrap();
    assert_eq!(v["q_ai"]["q2"], serde_json::json!([[1, 2], [3, 5, "+"], [4, 7, "-"]]));
}

#[test]
fn branch_table() {
    let out = stdout(&run(&["branch", "--n", "3", "--shape", "2,1"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("(2)\t") && lines[0].ends_with("\t1\t5"));
    assert!(lines[1].starts_with("(1)\t") && lines[1].ends_with("\t1\t3"));
    assert!(lines[2].ends_with("= 8, |SST_3(2,1)| = 8"));
}

#[test]
fn verify_and_exit_codes() {
    let o = run(&["verify", "--suite", "counts", "--max-n", "4", "--max-size", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("ok ") || l.ends_with("checks passed")));
    assert_eq!(run(&["verify", "--max-n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["rsai", "--n", "2", "--word", "1"]).status.code(), Some(2));
    assert_eq!(run(&["rsai", "--n", "3", "--word", "4"]).status.code(), Some(2));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert!(!run(&["branch", "--n", "3", "--shape", "oops"]).stderr.is_empty());
}
