use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn chordpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordpow"))
        .args(args)
        .env_remove("CHORDPOW_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn ce_band_matches_closed_form() {
    let o = chordpow(&["--format", "json", "ce", "--family", "band", "--n", "7", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["ce"], 3);
    assert_eq!(v["r"], 5);
    assert_eq!(v["agree"], true);
}

#[test]
fn ce_complete_two_is_zero() {
    let o = chordpow(&["--format", "json", "ce", "--family", "complete", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ce"], 0);
}

#[test]
fn ce_four_cycle_file_reports_heuristic_bracket() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c4.edges", "1 2\n2 3\n3 4\n4 1\n");
    let o = chordpow(&["--seed", "3", "--format", "json", "ce", &file]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["chordal"], false);
    assert_eq!(v["label"], "heuristic");
    let (lo, hi) = (v["lower"].as_f64().unwrap(), v["upper"].as_f64().unwrap());
    assert!(lo <= 1.0 && 1.0 <= hi, "[{lo}, {hi}]");
    let text = chordpow(&["--seed", "3", "ce", &file]);
    assert!(stdout(&text).contains("heuristic"));
}

#[test]
fn hset_examples() {
    let o = chordpow(&["hset", "--family", "complete", "--n", "4", "--powers", "odd"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("(−1+2ℕ) ∪ [2,∞)\nexact"));

    let o = chordpow(&["--format", "json", "hset", "--family", "cycle", "--n", "6", "--powers", "even"]);
    let v = json(&o);
    assert_eq!(v["exact"], false);
    assert_eq!(v["hset"]["exclusions"], serde_json::json!([1.0]));

    let o = chordpow(&["hset", "--family", "complete-bipartite", "--a", "2", "--b", "3", "--powers", "even"]);
    assert!(stdout(&o).starts_with("[2,∞)\nexact"));
}

#[test]
fn witness_exit_codes() {
    let found = chordpow(&["--format", "json", "witness", "--family", "complete", "--n", "5", "--alpha", "2.5"]);
    assert_eq!(found.status.code(), Some(0));
    let w = json(&found);
    assert!(w["image_min_eigenvalue"].as_f64().unwrap() < -1e-6 * w["image_scale"].as_f64().unwrap());

    let none = chordpow(&["witness", "--family", "complete", "--n", "5", "--alpha", "3"]);
    assert_eq!(none.status.code(), Some(1));
    assert!(stdout(&none).contains("none found in budget"));

    let tree = chordpow(&["witness", "--family", "tree", "--n", "8", "--alpha", "0.5"]);
    assert_eq!(tree.status.code(), Some(0));
}

#[test]
fn witness_file_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("w.json");
    let out = out.to_str().unwrap();
    let o = chordpow(&["--seed", "9", "witness", "--family", "band", "--n", "7", "--d", "3", "--alpha", "2.5", "--output", out]);
    assert_eq!(o.status.code(), Some(0));
    let v = chordpow(&["witness", "--verify", out]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).starts_with("valid witness"));

    let mut w: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    w["alpha"] = serde_json::json!(3.0);
    let tampered = write(dir.path(), "bad.json", &w.to_string());
    assert_eq!(chordpow(&["witness", "--verify", &tampered]).status.code(), Some(1));
}

#[test]
fn verify_reports_per_alpha() {
    let o = chordpow(&["--format", "json", "verify", "--family", "cycle", "--n", "5", "--alpha-grid", "1,1.5,2.5", "--samples", "200"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["expected_set"], "[1,∞)");
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    assert!(results.iter().all(|r| r["pass"] == true && r["contradiction"] == false));
}

#[test]
fn verify_cross_references_witness_for_non_member() {
    let o = chordpow(&["verify", "--family", "complete", "--n", "4", "--alpha-grid", "1.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("witness"));
}

#[test]
fn table1_passes() {
    let o = chordpow(&["--format", "csv", "table1", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn scan_streams() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.edges", "");
    let o = chordpow(&["--format", "json", "scan", &empty]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());

    let cycles: String = (4..=8)
        .map(|n| {
            let mut s: String = (1..n).map(|i| format!("{i} {}\n", i + 1)).collect();
            s.push_str(&format!("{n} 1\n---\n"));
            s
        })
        .collect();
    let file = write(dir.path(), "cycles.edges", &cycles);
    let o = chordpow(&["--seed", "1", "--format", "json", "scan", &file]);
    assert_eq!(o.status.code(), Some(0));
    let records: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 5);
    assert!(records.iter().all(|r| r["flagged"] == false));
    assert!(stderr(&o).contains("0 flags"));
}

#[test]
fn scan_continues_past_bad_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "mixed.edges", "1 2\n---\nnot an edge\n---\n1 2\n2 3\n");
    let o = chordpow(&["--format", "json", "scan", &file]);
    assert_eq!(o.status.code(), Some(0));
    let records: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 3);
    assert!(records[1].get("error").is_some());
    assert!(records[2].get("error").is_none());
}

#[test]
fn fixed_seed_is_byte_identical() {
    let args = ["--seed", "42", "--format", "json", "ce", "--family", "cycle", "--n", "5"];
    assert_eq!(chordpow(&args).stdout, chordpow(&args).stdout);
    let args = ["--seed", "42", "witness", "--family", "random-chordal", "--n", "8", "--alpha", "0.5"];
    let (a, b) = (chordpow(&args), chordpow(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn env_seed_honoured_outside_strict_only() {
    let args = ["--format", "json", "witness", "--family", "complete", "--n", "5", "--alpha", "2.5"];
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_chordpow"));
        c.args(extra).args(args).env_remove("CHORDPOW_SEED");
        if let Some(s) = env {
            c.env("CHORDPOW_SEED", s);
        }
        c.output().unwrap()
    };
    assert_eq!(run(Some("5"), &[]).stdout, run(None, &["--seed", "5"]).stdout);
    let strict = run(Some("5"), &["--strict"]);
    assert_eq!(strict.status.code(), Some(2));
    assert!(stderr(&strict).contains("--seed"));
    assert_eq!(run(Some("5"), &["--strict", "--seed", "5"]).status.code(), Some(0));
}

#[test]
fn usage_and_domain_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "g.edges", "1 2\n");
    let both = chordpow(&["ce", &file, "--family", "complete", "--n", "3"]);
    assert_eq!(both.status.code(), Some(2));
    assert!(stderr(&both).contains("not both"));

    let bad = write(dir.path(), "bad.edges", "1 x\n");
    assert_eq!(chordpow(&["ce", &bad]).status.code(), Some(2));
    assert_eq!(chordpow(&["ce", "--family", "band", "--n", "5"]).status.code(), Some(2));
    assert_eq!(chordpow(&["ce"]).status.code(), Some(2));
    assert_eq!(chordpow(&["bogus"]).status.code(), Some(2));
    assert_eq!(chordpow(&["witness", "--family", "complete", "--n", "4", "--alpha", "inf"]).status.code(), Some(2));
}
