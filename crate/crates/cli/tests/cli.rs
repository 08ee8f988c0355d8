use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric-morphisms"))
        .args(args)
        .env_remove("TORIC_MORPHISMS_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn diagnostic(o: &Output) -> Value {
    let text = String::from_utf8(o.stderr.clone()).unwrap();
    assert_eq!(text.lines().count(), 1, "stderr: {text}");
    serde_json::from_str(text.trim_end()).unwrap()
}

#[test]
fn moduli_count_json() {
    let o = run(&["moduli-count", &fixture("p1.json"), "--degree", "2,2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"polynomial\":{\"3\":-1,\"5\":1}}\n");
}

#[test]
fn primitives_of_product() {
    let o = run(&["fan-primitives", &fixture("p1xp1.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"primitive_collections\":[[0,1],[2,3]]}\n");
    let o = run(&["fan-primitives", &fixture("p1xp1.json")]);
    assert_eq!(stdout(&o), "{0, 1}\n{2, 3}\n");
}

#[test]
fn census_refuses_singular_fan_before_degrees() {
    let o = run(&["oracle-count", &fixture("p112.json"), "--degree", "1,1,2", "--q", "2"]);
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(diagnostic(&o)["error"], "assumptions_unmet");
}

#[test]
fn inadmissible_degree_reports_lattice_sum() {
    let o = run(&["moduli-betti", &fixture("p2.json"), "--degree", "1,1,2"]);
    assert_eq!(o.status.code(), Some(3));
    let d = diagnostic(&o);
    assert_eq!(d["lattice_sum"], serde_json::json!([-1, -1]));
    assert!(o.stdout.is_empty());

    let o = run(&["moduli-betti", &fixture("p2.json"), "--degree", "1,1"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["moduli-betti", &fixture("p2.json"), "--degree", "1,x,1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn invalid_fan_files() {
    let dir = tempfile::tempdir().unwrap();
    let bad_ray = dir.path().join("bad.json");
    std::fs::write(&bad_ray, r#"{"rank":1,"rays":[[2],[-1]],"max_cones":[[0],[1]]}"#).unwrap();
    let o = run(&["fan-validate", bad_ray.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(diagnostic(&o)["ray"], 0);

    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "{not json").unwrap();
    assert_eq!(run(&["target-betti", garbage.to_str().unwrap()]).status.code(), Some(2));

    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["target-betti", missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn budget_flag_and_environment() {
    let args = ["oracle-count", &fixture("p2.json"), "--degree", "2,2,2", "--q", "2"];
    let o = run(&[&args[..], &["--budget", "100"]].concat());
    assert_eq!(o.status.code(), Some(5));
    assert_eq!(diagnostic(&o)["required"], 512);

    let o = Command::new(env!("CARGO_BIN_EXE_toric-morphisms"))
        .args(args)
        .env("TORIC_MORPHISMS_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn oracle_output_is_deterministic() {
    let base = ["oracle-count", &fixture("p1xp1.json"), "--degree", "1,1,1,1", "--q", "3", "--format", "json"];
    let first = run(&base);
    assert_eq!(first.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["count"], 576);
    for workers in ["1", "2", "5"] {
        let again = run(&[&base[..], &["--workers", workers]].concat());
        assert_eq!(again.stdout, first.stdout);
    }
}

#[test]
fn check_flag_agrees_on_smooth_fixtures() {
    for (fan, degree, q) in [
        ("p1.json", "1,1", "3"),
        ("p2.json", "1,1,1", "2"),
        ("p1xp1.json", "1,1,1,1", "2"),
        ("f1.json", "1,1,1,2", "2"),
    ] {
        let o = run(&["moduli-count", &fixture(fan), "--degree", degree, "--check", q, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{fan}: {}", String::from_utf8_lossy(&o.stderr));
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["check"]["agree"], true);
        assert_eq!(v["check"]["oracle"], v["check"]["polynomial"]);
    }
}

#[test]
fn check_flag_reports_mismatch() {
    // a zero degree: the census counts 24, the polynomial predicts 18
    let o = run(&["moduli-count", &fixture("f1.json"), "--degree", "1,0,1,1", "--check", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(6));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["check"]["oracle"], 24);
    assert_eq!(v["check"]["polynomial"], 18);
}

#[test]
fn target_and_moduli_tables() {
    let o = run(&["target-betti", &fixture("p1xp1.json"), "--format", "json"]);
    assert_eq!(stdout(&o), "{\"entries\":[[0,0,1],[2,2,2],[4,4,1]],\"total\":4}\n");

    let o = run(&["fan-class-group", &fixture("p1xp1.json"), "--format", "json"]);
    assert_eq!(stdout(&o), "{\"free_rank\":2,\"torsion\":[]}\n");

    let o = run(&["moduli-betti", &fixture("p1.json"), "--degree", "5,5", "--genus", "1", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["upper_bound"], true);
    assert_eq!(v["n0"], 3);

    let o = run(&["moduli-betti", &fixture("p1.json"), "--degree", "1,1", "--genus", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors() {
    let o = run(&["moduli-count", &fixture("p1.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(diagnostic(&o)["error"], "usage");
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("oracle-count"));
}

#[test]
fn in_process_runner() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let p3 = fixture("p3.json");
    let code = toric_morphisms_cli::run(
        ["toric-morphisms", "moduli-count", &p3, "--degree", "1,1,1,1", "--format", "json"],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["polynomial"]["7"], 1);
    assert!(err.is_empty());
}
