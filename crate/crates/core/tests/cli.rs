//! End-to-end runs of the `sgsr` binary.

mod common;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn sgsr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgsr"))
        .args(args)
        .env_remove("SGSR_CENSUS_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sgsr-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const G1: &str =
    "6 15\n0 1 -\n0 2 +\n0 3 +\n0 4 +\n0 5 +\n1 2 +\n1 3 +\n1 4 +\n1 5 +\n2 3 -\n2 4 +\n2 5 +\n3 4 +\n3 5 +\n4 5 -\n";

#[test]
fn verify_reports_parameters_and_class() {
    let dir = scratch("verify");
    let file = write(&dir, "g1.sg", G1);
    let out = sgsr(&["verify", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "(6,5,0,4,null) C3\n");

    let json: Value = serde_json::from_str(&stdout(&sgsr(&["--json", "verify", &file]))).unwrap();
    assert_eq!(json["params"]["c"], Value::Null);
    assert_eq!(json["class"], "C3");
}

#[test]
fn verify_rejects_a_path_with_witness() {
    let dir = scratch("path");
    let file = write(&dir, "path3.sg", "3 2\n0 1 +\n1 2 +\n");
    let out = sgsr(&["--json", "verify", &file]);
    assert_eq!(out.status.code(), Some(1));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["failure"]["kind"], "NotRegularDiagonal");
    assert_eq!(json["failure"]["witness"]["pair"], serde_json::json!([1, 1]));
}

#[test]
fn verify_reads_graph6() {
    let dir = scratch("g6");
    let file = write(&dir, "k6.g6", "E~~w\n");
    let out = sgsr(&["verify", &file]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("ExcludedHomogeneousCompleteOrEdgeless"));
}

#[test]
fn bad_input_is_a_usage_error() {
    let dir = scratch("bad");
    let file = write(&dir, "bad.sg", "3 1\n0 0 +\n");
    let out = sgsr(&["verify", &file]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(sgsr(&["verify", "/nonexistent.sg"]).status.code(), Some(2));
    assert_eq!(sgsr(&["classify", "--r", "5"]).status.code(), Some(2));
    assert_eq!(sgsr(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn params_prints_degree_data() {
    let dir = scratch("params");
    let file = write(&dir, "g1.sg", G1);
    let out = sgsr(&["--json", "params", &file]);
    assert_eq!(out.status.code(), Some(0));
    let json: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["regular_degree"], 5);
    assert_eq!(json["net_degree"], 3);
    assert_eq!(json["balanced"], false);
    let text = stdout(&sgsr(&["params", &file]));
    assert!(text.contains("net degree 3"));
}

#[test]
fn feasible_lists_sorted_json_lines() {
    let out = sgsr(&["--json", "-q", "feasible", "--r", "5", "--net", "1", "--nmax", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let keys: Vec<(i64, i64)> = lines
        .iter()
        .map(|v| (v["a"].as_i64().unwrap(), v["b"].as_i64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert!(lines
        .iter()
        .any(|v| v["n"]["fixed"] == 12 && v["a"] == 2 && v["b"] == 1 && v["c"] == -2));
    let text = stdout(&sgsr(&["-q", "feasible", "--r", "5", "--net", "1", "--nmax", "12"]));
    assert!(text.lines().any(|l| l == "(12,5,2,1,-2)"));
}

#[test]
fn gen_writes_graph6_file() {
    let dir = scratch("gen");
    let file = dir.join("r8.g6");
    let out = sgsr(&[
        "-q",
        "gen",
        "--n",
        "8",
        "--r",
        "5",
        "--graph6-out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "3\n");
    assert_eq!(fs::read_to_string(&file).unwrap().lines().count(), 3);
    let json: Value = serde_json::from_str(&stdout(&sgsr(&["--json", "-q", "gen", "--n", "6", "--r", "5"]))).unwrap();
    assert_eq!(json["count"], 1);
    assert_eq!(json["graph6"][0], "E~~w");
    assert_eq!(sgsr(&["gen", "--n", "7", "--r", "5"]).status.code(), Some(2));
}

#[test]
fn classify_output_is_independent_of_jobs() {
    let run = |jobs: &str| {
        let out = sgsr(&[
            "--json", "-q", "classify", "--r", "5", "--net", "3", "--nmax", "10", "--jobs", jobs,
        ]);
        assert_eq!(out.status.code(), Some(0));
        out.stdout
    };
    let one = run("1");
    assert_eq!(one, run("3"));
    let json: Value = serde_json::from_slice(&one).unwrap();
    let count: usize = json["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["survivors"].as_array().unwrap().len())
        .sum();
    assert_eq!(count, 5);
    assert_eq!(json["strata"][0]["verified_up_to"], 10);
}

#[test]
fn classify_from_census_matches_generation() {
    let census = common::census_dir();
    let run = |extra: &[&str], env: Option<&Path>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_sgsr"));
        cmd.args(["--json", "-q", "classify", "--r", "5", "--net", "3", "--nmax", "10"])
            .args(extra);
        cmd.env_remove("SGSR_CENSUS_DIR");
        if let Some(dir) = env {
            cmd.env("SGSR_CENSUS_DIR", dir);
        }
        let out = cmd.output().unwrap();
        assert_eq!(out.status.code(), Some(0));
        serde_json::from_slice::<Value>(&out.stdout).unwrap()
    };
    let survivors = |v: &Value| -> Vec<Value> {
        v["reports"]
            .as_array()
            .unwrap()
            .iter()
            .flat_map(|r| r["survivors"].as_array().unwrap().clone())
            .collect()
    };
    let generated = run(&[], None);
    let flagged = run(&["--census", census.to_str().unwrap()], None);
    let from_env = run(&[], Some(&census));
    assert_eq!(survivors(&generated), survivors(&flagged));
    assert_eq!(flagged, from_env);
    assert!(flagged["reports"][0]["source"].as_str().unwrap().starts_with("census:"));
}

#[test]
fn classify_budget_exhaustion_exits_3() {
    let out = sgsr(&[
        "--json",
        "-q",
        "classify",
        "--r",
        "5",
        "--net",
        "1",
        "--nmax",
        "10",
        "--max-nodes",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["reports"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["incomplete"].is_string()));
}

#[test]
fn classify_constrained_order() {
    let out = sgsr(&[
        "-q",
        "classify",
        "--r",
        "5",
        "--net",
        "3",
        "--nmax",
        "10",
        "--full-max",
        "8",
        "--constrained",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("constrained(10,5,-2,4,2)"));
    assert!(text.contains("survivors: 5"));
}

#[test]
fn catalog_verifies_and_exports() {
    let dir = scratch("catalog");
    let out = sgsr(&["catalog", "--export", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.starts_with("pass")).count(), 7);
    for name in ["G1", "G2", "S8_1", "S10_1", "S10_2", "S10_3", "S12_1"] {
        let sg = dir.join(format!("{name}.sg"));
        let side: Value = serde_json::from_str(&fs::read_to_string(dir.join(format!("{name}.json"))).unwrap()).unwrap();
        let verified = sgsr(&["--json", "verify", sg.to_str().unwrap()]);
        assert_eq!(verified.status.code(), Some(0), "{name}");
        let json: Value = serde_json::from_slice(&verified.stdout).unwrap();
        assert_eq!(json["params"], side["expected"], "{name}");
    }
    assert_eq!(fs::read_to_string(dir.join("G1.sg")).unwrap(), G1);
}

#[test]
fn catalog_fixture_directory() {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let ok = sgsr(&["-q", "catalog", "--fixtures", fixtures.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    let empty = scratch("nofixtures");
    let missing = sgsr(&["catalog", "--fixtures", empty.to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("sgsr classify"));

    let tampered = scratch("tampered");
    let s8 = fs::read_to_string(fixtures.join("S8_1.sg"))
        .unwrap()
        .replace("0 4 +", "0 4 -");
    write(&tampered, "S8_1.sg", &s8);
    fs::copy(fixtures.join("S10_1.sg"), tampered.join("S10_1.sg")).unwrap();
    let bad = sgsr(&["catalog", "--fixtures", tampered.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL S8_1"));
}

#[test]
fn lemma2_outcomes() {
    let dir = scratch("lemma2");
    let out = sgsr(&["catalog", "--export", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let s12 = dir.join("S12_1.sg");
    let holds = sgsr(&["lemma2", s12.to_str().unwrap()]);
    assert_eq!(holds.status.code(), Some(0));
    assert_eq!(stdout(&holds), "holds\n");
    let g1 = sgsr(&["--json", "lemma2", dir.join("G1.sg").to_str().unwrap()]);
    assert_eq!(g1.status.code(), Some(1));
    let json: Value = serde_json::from_slice(&g1.stdout).unwrap();
    assert_eq!(json["not_applicable"], "graph is complete");
}
