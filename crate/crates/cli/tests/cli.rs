use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn artinx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artinx"))
        .args(args)
        .env_remove("ARTINX_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = artinx(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn compute_quaternion_eight() {
    let v = json(&["compute", "--group", "Q8", "--json"]);
    assert_eq!(v["exponent_congruence"], 2);
    assert_eq!(v["exponent_marks"], 2);
    assert_eq!(v["methods_agree"], true);
    assert_eq!(v["predictor"]["branch"], "Q or D");
}

#[test]
fn compute_cyclic_twelve() {
    let v = json(&["compute", "--group", "C12", "--json"]);
    assert_eq!(v["exponent_congruence"], 1);
    assert_eq!(v["predictor"]["value"], 1);
}

#[test]
fn audit_marks_the_binding_pair() {
    let out = artinx(&["compute", "--group", "S3", "--audit"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let binding: Vec<&str> = text.lines().filter(|l| l.starts_with(" * ")).collect();
    assert_eq!(binding.len(), 1, "{text}");
    assert!(binding[0].contains("U=C3") && binding[0].contains("V=N6") && binding[0].contains("constraint 2"));

    let v = json(&["compute", "--group", "S3", "--audit", "--json"]);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 3);
    assert_eq!(v["binding_pairs"][0]["index"], 2);
}

#[test]
fn explicit_family_and_single_method() {
    let v = json(&["compute", "--group", "S3", "--family-classes", "0,1,2,3", "--method", "marks", "--json"]);
    assert_eq!(v["exponent_marks"], 1);
    assert!(v["exponent_congruence"].is_null());
}

#[test]
fn marks_tables() {
    let v = json(&["marks", "--group", "C2", "--json"]);
    assert_eq!(v["marks"], serde_json::json!([[2, 0], [1, 1]]));
    let v = json(&["marks", "--group", "S3", "--json"]);
    assert_eq!(v["class_orders"], serde_json::json!([1, 2, 3, 6]));
    assert_eq!(v["marks"], serde_json::json!([[6, 0, 0, 0], [3, 1, 0, 0], [2, 0, 2, 0], [1, 1, 1, 1]]));
    let v = json(&["marks", "--group", "C1", "--json"]);
    assert_eq!(v["marks"], serde_json::json!([[1]]));
    let text = stdout(&artinx(&["marks", "--group", "S3"]));
    assert!(text.contains("C2*3"), "{text}");
}

#[test]
fn sweep_examples() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    let out = artinx(&["sweep", "--max-order", "27", "--checks", "oddp,conductor,sylow", "--json", path.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let groups = v["groups"].as_array().unwrap();
    let find = |name: &str| groups.iter().find(|g| g["group"] == name).unwrap().clone();
    assert_eq!(find("C3xC3")["exponent"], 3);
    assert_eq!(find("H3")["exponent"], 9);
    assert_eq!(find("C9xC3")["exponent"], 9);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v.get("timings").is_none());
    assert!(stdout(&out).contains("all checks passed"));
}

#[test]
fn sweep_json_is_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let run = |jobs: &str, name: &str| {
        let path = dir.path().join(name);
        let out = artinx(&["sweep", "--max-order", "24", "--jobs", jobs, "--json", path.to_str().unwrap()]);
        assert!(out.status.success());
        std::fs::read(&path).unwrap()
    };
    assert_eq!(run("1", "a.json"), run("3", "b.json"));
}

#[test]
fn exit_codes() {
    assert_eq!(artinx(&["compute", "--group", "Q12"]).status.code(), Some(1));
    assert_eq!(artinx(&["compute", "--group", "C0"]).status.code(), Some(1));
    assert_eq!(artinx(&["compute", "--group", "S3", "--family-classes", "9"]).status.code(), Some(1));
    assert_eq!(artinx(&["compute"]).status.code(), Some(1));
    assert_eq!(artinx(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(artinx(&["sweep", "--checks", "bogus"]).status.code(), Some(1));
    assert_eq!(artinx(&["sweep", "--max-order", "300"]).status.code(), Some(1));
    assert_eq!(artinx(&["--help"]).status.code(), Some(0));
    assert_eq!(artinx(&["--version"]).status.code(), Some(0));
}

fn cache_files(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> =
        std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    names
}

#[test]
fn lattice_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = json(&["--cache", cache, "compute", "--group", "D12", "--json"]);
    let files = cache_files(dir.path());
    assert_eq!(files.len(), 1);
    assert!(files[0].starts_with("lattice-D12-") && files[0].ends_with(".json"), "{files:?}");
    let second = json(&["--cache", cache, "compute", "--group", "D12", "--json"]);
    assert_eq!(first, second);

    // a corrupted entry is recomputed and rewritten
    let path = dir.path().join(&files[0]);
    std::fs::write(&path, "{ not json").unwrap();
    let third = json(&["compute", "--group", "D12", "--json", "--cache", cache]);
    assert_eq!(first, third);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(serde_json::from_str::<Value>(&text).is_ok());

    let env_run = Command::new(env!("CARGO_BIN_EXE_artinx"))
        .args(["compute", "--group", "Q8"])
        .env("ARTINX_CACHE_DIR", cache)
        .output()
        .unwrap();
    assert!(env_run.status.success());
    assert_eq!(cache_files(dir.path()).len(), 2);
}
