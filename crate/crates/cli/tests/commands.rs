//! End-to-end runs of the binary: exit codes, report shape, determinism.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

const KRONECKER: &str =
    r#"{"vertices": ["1", "2"], "arrows": [["a", "1", "2"], ["b", "1", "2"]], "relations": []}"#;
const DUAL_NUMBERS: &str =
    r#"{"vertices": ["1"], "arrows": [["x", "1", "1"]], "relations": [["x", "x"]]}"#;
const POINT: &str = r#"{"vertices": ["1"], "arrows": [], "relations": []}"#;

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).expect("fixture write");
    path
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_grcoh"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, stdout, stderr) = run(&full);
    let v = serde_json::from_str(&stdout)
        .unwrap_or_else(|_| panic!("stdout is json, got {stdout:?} / {stderr:?}"));
    (code, v)
}

#[test]
fn flat_instance_earns_the_certified_flat_path() {
    let dir = TempDir::new().unwrap();
    let point = write(dir.path(), "point.json", POINT);
    let (code, v) = run_json(&[
        "coherence",
        point.to_str().unwrap(),
        "--sigma",
        "free:1",
        "--cap",
        "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "certified-flat-path");
    assert_eq!(v["report"]["certificate"]["verdict"]["label"], "certified-flat-path");
}

#[test]
fn impure_radical_quotient_fails_purity_at_stage_two() {
    let dir = TempDir::new().unwrap();
    let dual = write(dir.path(), "dual.json", DUAL_NUMBERS);
    let (code, v) = run_json(&[
        "purity",
        dual.to_str().unwrap(),
        "--sigma",
        "top",
        "--max-power",
        "2",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "purity-failure");
    let witness = &v["report"]["stages"][1]["witness"];
    assert_eq!(witness["stage"], 2);
    assert_eq!(witness["index"], 1);
    assert_eq!(witness["dim"], 1);
}

#[test]
fn kronecker_translate_bimodule_reports_dimension_twelve() {
    let dir = TempDir::new().unwrap();
    let kron = write(dir.path(), "kron.json", KRONECKER);
    let (code, v) = run_json(&["theta", kron.to_str().unwrap(), "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "concentrated");
    assert_eq!(v["report"]["dim"], 12);
    assert_eq!(v["report"]["slice_dims"], serde_json::json!([5, 7]));
    assert_eq!(v["report"]["validation"], serde_json::json!([[0, 0], [1, 12]]));
}

#[test]
fn identical_requests_reproduce_the_report_byte_for_byte() {
    let dir = TempDir::new().unwrap();
    let kron = write(dir.path(), "kron.json", KRONECKER);
    let args = [
        "coherence",
        kron.to_str().unwrap(),
        "--sigma",
        "theta",
        "--cap",
        "3",
        "--count",
        "2",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let (c1, s1, _) = run(&args);
    let (c2, s2, _) = run(&args);
    assert_eq!(c1, 0);
    assert_eq!(c1, c2);
    assert!(!s1.is_empty());
    assert_eq!(s1, s2);
}

#[test]
fn every_explicit_bound_is_echoed_in_the_report() {
    let dir = TempDir::new().unwrap();
    let kron = write(dir.path(), "kron.json", KRONECKER);
    let (code, v) = run_json(&[
        "coherence",
        kron.to_str().unwrap(),
        "--sigma",
        "theta",
        "--cap",
        "3",
        "--count",
        "2",
        "--seed",
        "9",
        "--length",
        "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["bounds"]["cap"], 3);
    assert_eq!(v["bounds"]["count"], 2);
    assert_eq!(v["bounds"]["seed"], 9);
    assert_eq!(v["bounds"]["length"], 5);
    assert_eq!(v["tool"], "grcoh");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["field"], "Q");
}

#[test]
fn malformed_input_exits_two_with_a_position() {
    let dir = TempDir::new().unwrap();
    let broken = write(dir.path(), "broken.json", "{\"vertices\": [");
    let (code, stdout, stderr) = run(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("broken.json"));
    assert!(stderr.contains("line"));
}

#[test]
fn graded_kernel_of_a_file_map_lists_generators() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "kron.json", KRONECKER);
    let map = write(
        dir.path(),
        "map.json",
        r#"{
  "tower": {"algebra": "kron.json", "sigma": "theta", "cap": 3},
  "source_degrees": [1],
  "target_degrees": [0],
  "entries": [[0, 0, 1, [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]]]
}"#,
    );
    let (code, v) = run_json(&["graded-kernel", map.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "computed");
    assert_eq!(v["report"]["kernel_dims"], serde_json::json!([0, 1, 5, 9]));
    assert_eq!(v["report"]["generator_degrees"], serde_json::json!([1]));
    assert_eq!(v["bounds"]["cap"], 3);
}

#[test]
fn regular_module_ladder_stabilizes_immediately() {
    let dir = TempDir::new().unwrap();
    let kron = write(dir.path(), "kron.json", KRONECKER);
    let (code, v) = run_json(&["eta", kron.to_str().unwrap(), "--max-s", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "stabilized");
    assert_eq!(v["report"]["stabilized"], 0);
    assert_eq!(v["report"]["hom_dims"], serde_json::json!([4, 4, 4, 4]));
}

#[test]
fn impure_tower_never_stabilizes_within_the_bound() {
    let dir = TempDir::new().unwrap();
    let dual = write(dir.path(), "dual.json", DUAL_NUMBERS);
    let (code, v) = run_json(&[
        "stabilize",
        dual.to_str().unwrap(),
        "--module",
        "simple:0",
        "--sigma",
        "top",
        "--max-s",
        "6",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "not-stabilized-within-bound");
    assert_eq!(v["report"]["m0"], Value::Null);
}

#[test]
fn resolution_beyond_the_length_bound_is_a_negative_verdict() {
    let dir = TempDir::new().unwrap();
    let dual = write(dir.path(), "dual.json", DUAL_NUMBERS);
    let (code, v) = run_json(&[
        "resolve",
        dual.to_str().unwrap(),
        "--module",
        "simple:0",
        "--length",
        "3",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "length-exceeded");
    assert_eq!(v["report"]["complete"], false);
    assert_eq!(v["report"]["projective_dimension"], Value::Null);
}

#[test]
fn ext_defaults_recover_the_concentration_table() {
    let dir = TempDir::new().unwrap();
    let kron = write(dir.path(), "kron.json", KRONECKER);
    let (code, v) = run_json(&["ext", kron.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["dims"], serde_json::json!([0, 12, 0]));
}

#[test]
fn exported_theta_file_round_trips_as_a_sigma_input() {
    let dir = TempDir::new().unwrap();
    let kron = write(dir.path(), "kron.json", KRONECKER);
    let (code, v) = run_json(&["theta", kron.to_str().unwrap()]);
    assert_eq!(code, 0);
    let theta_file = dir.path().join("theta.json");
    std::fs::write(&theta_file, serde_json::to_string(&v["report"]["theta"]).unwrap()).unwrap();
    let (code, v) = run_json(&[
        "purity",
        kron.to_str().unwrap(),
        "--sigma",
        theta_file.to_str().unwrap(),
        "--max-power",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pure");
    assert_eq!(v["report"]["sigma_dim"], 12);
}

#[test]
fn out_file_receives_the_same_bytes_as_stdout() {
    let dir = TempDir::new().unwrap();
    let kron = write(dir.path(), "kron.json", KRONECKER);
    let out = dir.path().join("report.json");
    let (code, stdout, _) = run(&[
        "preprojective",
        kron.to_str().unwrap(),
        "--cap",
        "3",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(out).unwrap(), stdout);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["report"]["dims"], serde_json::json!([4, 12, 20, 28]));
}

#[test]
fn text_format_carries_the_same_verdict_and_bounds() {
    let dir = TempDir::new().unwrap();
    let kron = write(dir.path(), "kron.json", KRONECKER);
    let (code, stdout, _) = run(&["theta", kron.to_str().unwrap(), "--length", "4"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("verdict: concentrated"));
    assert!(stdout.contains("length: 4"));
    assert!(stdout.contains("dim: 12"));
}

#[test]
fn module_files_load_and_validate_over_the_input_algebra() {
    let dir = TempDir::new().unwrap();
    let point = write(dir.path(), "point.json", POINT);
    let module = write(
        dir.path(),
        "m.json",
        r#"{"algebra": "point.json", "dim": 1, "action": [[0, [[1]]]]}"#,
    );
    let (code, v) = run_json(&[
        "validate",
        point.to_str().unwrap(),
        "--module",
        module.to_str().unwrap(),
        "--module",
        "regular",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "valid");
    assert_eq!(v["report"]["modules"][0]["dim"], 1);

    let (code, _, stderr) = run(&["validate", point.to_str().unwrap(), "--module", "simple:3"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("out of range"));
}

#[test]
fn seeded_module_checks_satisfy_the_two_dimensional_vanishing() {
    let dir = TempDir::new().unwrap();
    let kron = write(dir.path(), "kron.json", KRONECKER);
    let (code, v) = run_json(&[
        "lemma34",
        kron.to_str().unwrap(),
        "--sigma",
        "theta",
        "--count",
        "3",
        "--seed",
        "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "pure");
    assert_eq!(v["report"]["failures"], 0);
    assert_eq!(v["report"]["self_ext_dims"], serde_json::json!([0, 0]));
    assert_eq!(v["report"]["checks"].as_array().unwrap().len(), 3);
}

#[test]
fn graded_resolution_of_a_simple_terminates() {
    let dir = TempDir::new().unwrap();
    let kron = write(dir.path(), "kron.json", KRONECKER);
    let (code, v) = run_json(&[
        "graded-resolve",
        kron.to_str().unwrap(),
        "--module",
        "simple:0",
        "--sigma",
        "theta",
        "--cap",
        "4",
        "--length",
        "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "complete");
    assert!(v["report"]["length"].as_u64().unwrap() <= 2);
}
