use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hombracket")).args(args).output().expect("binary runs")
}

fn temp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hombracket-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn passing_check() {
    let o = run(&["check", "lie", "sl2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn failing_check_reports_witness() {
    let n = temp("n.json", "[[0,0,0],[1,0,0],[0,0,0]]");
    let o = run(&["check", "nijenhuis", "sl2", "--n", n.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], false);
    let conds = v["reports"][0]["conditions"].as_array().unwrap();
    let c = conds.iter().find(|c| c["name"] == "nijenhuis-identity").unwrap();
    assert_eq!(c["witness"]["args"], serde_json::json!([1, 3]));
}

#[test]
fn precondition_violation() {
    let n = temp("nc.json", "[[0,1],[0,0]]");
    let o = run(&["check", "nijenhuis", "affine2", "--n", n.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn parse_errors() {
    let bad = temp("bad.json", r#"{"name":"x","dim":2,"alpha":[[1,0],[0,0]],"mu":[],"checks":[]}"#);
    assert_eq!(run(&["check", "lie", bad.to_str().unwrap()]).status.code(), Some(4));
    let junk = temp("junk.json", r#"{"name":"x","dim":2,"alpha":[[1,"1/0"],[0,1]],"mu":[],"checks":[]}"#);
    let o = run(&["check", "lie", junk.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("alpha"));
    assert_eq!(run(&["check", "lie", "/no/such/file.json"]).status.code(), Some(4));
}

#[test]
fn bracket_verb() {
    let alpha = temp("alpha.json", "[[1,0],[0,2]]");
    let mu = temp("mu.json", r#"[{"cov":[1,2],"vec":[2],"coeff":"1"}]"#);
    let o = run(&["bracket", "--alpha", alpha.to_str().unwrap(), mu.to_str().unwrap(), mu.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn cohomology_verb() {
    let o = run(&["cohomology", "sl2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let h: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|d| d["cohomology"].as_u64().unwrap()).collect();
    assert_eq!(h, vec![0, 0, 0, 0]);
}

#[test]
fn deform_verb() {
    let o = run(&["deform", "affine2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["omega"].is_array());
    assert!(v["polynomial"].is_array());
}

#[test]
fn corpus_verbs() {
    let o = run(&["corpus", "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sl2_yau"));
    let o = run(&["corpus", "show", "sl2"]);
    assert_eq!(stdout(&o), hombracket::corpus::source("sl2").unwrap());
}

#[test]
fn suite_verb() {
    let o = run(&["suite", "cohomology", "--seed", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 3);
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["seed"] == 3));
    assert_eq!(run(&["suite", "nope"]).status.code(), Some(4));
}
