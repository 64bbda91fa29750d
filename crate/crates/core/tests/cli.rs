use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fan-turan"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_then_check_free() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["gen", "star-cover n=11 t=2 r=3", "-o", "sc.uhg"]);
    assert_eq!(code(&o), 0);
    let text = fs::read_to_string(dir.path().join("sc.uhg")).unwrap();
    assert!(text.starts_with("11 3 81\n"));

    let o = run(dir.path(), &["check-free", "sc.uhg", "--family", "fan t=2"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "FREE"));

    let o = run(dir.path(), &["check-free", "sc.uhg", "--family", "triangle"]);
    assert_eq!(code(&o), 1);
    let emb: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(emb["core_map"].as_array().unwrap().len(), 3);

    let o = run(dir.path(), &["check-free", "sc.uhg", "--family", "fan t=1", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["free"], false);
}

#[test]
fn embed_and_check_embedding() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("k.uhg"), "6 3 3\n0 1 3\n1 2 4\n0 2 5\n").unwrap();
    let o = run(dir.path(), &["embed", "k.uhg", "--family", "triangle", "--through", "1,2,4"]);
    assert_eq!(code(&o), 0);
    fs::write(dir.path().join("emb.json"), stdout(&o)).unwrap();
    let o = run(dir.path(), &["embed", "k.uhg", "--family", "triangle", "--check", "emb.json"]);
    assert_eq!(code(&o), 0);

    fs::write(dir.path().join("two.uhg"), "6 3 2\n0 1 3\n1 2 4\n").unwrap();
    let o = run(dir.path(), &["embed", "two.uhg", "--family", "triangle"]);
    assert_eq!((code(&o), stdout(&o).trim()), (1, "NONE"));
    let o = run(dir.path(), &["embed", "two.uhg", "--family", "triangle", "--check", "emb.json"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn classify_reports() {
    let dir = tempfile::tempdir().unwrap();
    run(dir.path(), &["gen", "star-cover", "n=10", "t=2", "r=3", "-o", "h.uhg"]);
    let o = run(dir.path(), &["classify", "h.uhg", "--t", "2"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["three"]["e"], serde_json::json!([28, 0, 0]));
}

#[test]
fn turan_certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["turan", "--n", "6", "--r", "3", "--forbid", "triangle", "-o", "c.json"]);
    assert_eq!(code(&o), 0);
    let cert: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((cert["value"].as_u64(), cert["exact"].as_bool()), (Some(10), Some(true)));
    assert_eq!(cert["schema"], 1);

    let o = run(dir.path(), &["verify-cert", "c.json"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));

    let mut bad = cert.clone();
    bad["witness"] = serde_json::json!([[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]]);
    bad["value"] = serde_json::json!(4);
    fs::write(dir.path().join("bad.json"), bad.to_string()).unwrap();
    let o = run(dir.path(), &["verify-cert", "bad.json"]);
    assert_eq!(code(&o), 1);

    fs::write(dir.path().join("junk.json"), "{").unwrap();
    assert_eq!(code(&run(dir.path(), &["verify-cert", "junk.json"])), 2);
}

#[test]
fn turan_zero_budget_is_inexact() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(
        dir.path(),
        &["turan", "--n", "6", "--r", "3", "--forbid", "path k=3", "--budget-sec", "0", "--sym", "off"],
    );
    assert_eq!(code(&o), 0);
    let cert: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(cert["exact"], false);
}

#[test]
fn turan_forbid_file() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p.uhg"), "4 3 2\n0 1 2\n0 1 3\n").unwrap();
    let o = run(dir.path(), &["turan", "--n", "5", "--r", "3", "--forbid-file", "p.uhg"]);
    assert_eq!(code(&o), 0);
    let cert: Value = serde_json::from_str(&stdout(&o)).unwrap();
    // no pair in two triples: at most floor(10 / 3) triples
    assert_eq!(cert["value"], 2);
}

#[test]
fn verify_theorem_json() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["verify-theorem", "--n", "12", "--t", "2", "--json", "--seed", "9"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count_claim"]["enumerated"], 100);
    assert_eq!(v["freeness"]["free"], true);
    assert_eq!(v["environment"]["seed"], 9);
    assert_eq!(v["schema"], 1);
}

#[test]
fn errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("dup.uhg"), "4 3 2\n0 1 2\n2 1 0\n").unwrap();
    let o = run(dir.path(), &["check-free", "dup.uhg", "--family", "triangle"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(code(&run(dir.path(), &["turan", "--n", "5"])), 2);
    assert_eq!(code(&run(dir.path(), &["gen", "widget n=2"])), 2);
}

#[test]
fn random_gen_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let a = stdout(&run(dir.path(), &["gen", "random", "n=9", "r=3", "p=0.4", "--seed", "5"]));
    let b = stdout(&run(dir.path(), &["--seed", "5", "gen", "random", "n=9", "r=3", "p=0.4"]));
    assert_eq!(a, b);
    assert!(a.starts_with("9 3 "));
}
