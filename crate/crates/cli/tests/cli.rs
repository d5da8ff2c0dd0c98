use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const SQUARE: &str =
    r#"{"type":"polygonal","vertices":[["1","1"],["-1","1"],["-1","-1"],["1","-1"]]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_helly-plane"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_writes_report_and_exits_zero() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&[
        "verify",
        "lemma-main",
        "--trials",
        "20",
        "--seed",
        "3",
        "--out",
        s(&out),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("20 pass"));
    let report: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["records"].as_array().unwrap().len(), 20);
    assert_eq!(report["counts"]["fail"], 0);
}

#[test]
fn verify_is_deterministic_across_runs() {
    let dir = TempDir::new().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        let o = run(&[
            "verify",
            "thm1",
            "--trials",
            "15",
            "--seed",
            "9",
            "--ball",
            "maxnorm",
            "--out",
            s(p),
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn verify_float_mode_and_ball_file() {
    let dir = TempDir::new().unwrap();
    let ball = file(&dir, "ball.json", SQUARE);
    let o = run(&[
        "verify",
        "thm2",
        "--trials",
        "10",
        "--mode",
        "float",
        "--tol",
        "1e-9",
        "--ball",
        s(&ball),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "thm1", "--mode", "fuzzy"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "thm1", "--ball", "/no/such/file.json"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn gallery_prints_five_passing_lines() {
    let o = run(&["gallery", "run"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().all(|l| l["pass"] == true));
    assert_eq!(lines[0]["name"], "thm3-closed-fails");
}

#[test]
fn signs_reports_a_passing_choice() {
    let dir = TempDir::new().unwrap();
    let ball = file(&dir, "ball.json", SQUARE);
    let vs = file(
        &dir,
        "v.json",
        r#"{"vectors":[["1","0"],["0","1"],["1","1"],["-1","1/2"]]}"#,
    );
    let svg = dir.path().join("out.svg");
    let o = run(&["signs", s(&vs), "--ball", s(&ball), "--svg", s(&svg)]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["signs"].as_array().unwrap().len(), 4);
    assert_eq!(v["check"]["exhaustive"], true);
    assert!(fs::read_to_string(&svg).unwrap().starts_with("<svg"));
}

#[test]
fn signs_rejects_off_boundary_vectors() {
    let dir = TempDir::new().unwrap();
    let ball = file(&dir, "ball.json", SQUARE);
    let vs = file(&dir, "v.json", r#"{"vectors":[["1/2","0"]]}"#);
    assert_eq!(
        run(&["signs", s(&vs), "--ball", s(&ball)]).status.code(),
        Some(2)
    );
}

#[test]
fn ginzburg_prints_json_lines() {
    let dir = TempDir::new().unwrap();
    let vs = file(
        &dir,
        "v.json",
        r#"{"vectors":[["1","0"],["0","1"],["-1","0"]]}"#,
    );
    let o = run(&["ginzburg", s(&vs), "--u", "0,1"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 4);
    let last = lines.last().unwrap();
    assert_eq!(last["check"], "ok");
    assert!((last["final_norm"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    // A leading minus parses as a value; these vectors are outside that halfplane.
    assert_eq!(
        run(&["ginzburg", s(&vs), "--u", "0,-1"]).status.code(),
        Some(2)
    );
}

#[test]
fn symmetry_check_reports_witnesses() {
    let dir = TempDir::new().unwrap();
    let tri = file(
        &dir,
        "tri.json",
        r#"{"vertices":[["2","-1"],["-2","-1"],["0","2"]]}"#,
    );
    let svg = dir.path().join("tri.svg");
    let o = run(&["symmetry", "check", s(&tri), "--svg", s(&svg)]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["symmetric"], false);
    assert!(v["witness_i"].is_object() && v["witness_ii"].is_object());
    assert!(svg.exists());

    let sq = file(
        &dir,
        "sq.json",
        r#"{"vertices":[["1","1"],["-1","1"],["-1","-1"],["1","-1"]]}"#,
    );
    let o = run(&["symmetry", "check", s(&sq)]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["symmetric"], true);
    assert!(v["witness_i"].is_null());

    let seg = file(&dir, "seg.json", r#"{"vertices":[["1","0"],["-1","0"]]}"#);
    assert_eq!(run(&["symmetry", "check", s(&seg)]).status.code(), Some(2));
}
