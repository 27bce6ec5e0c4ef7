//! Black-box tests of the `boomerang` binary: exit-code contract, report
//! shape, and byte-determinism of JSON output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boomerang"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn rb_check_passes_on_the_good_square() {
    let o = run(&["rb-check", &fixture("square_rb.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let rep: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep["exit_code"], 0);
    let names: Vec<&str> = rep["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"rainbow boomerang"));
    assert!(names.contains(&"walk oracle agreement"));
}

#[test]
fn rb_check_fails_with_witness_on_the_bad_square() {
    let o = run(&["rb-check", &fixture("square_bad.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let rep: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rb = rep["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "rainbow boomerang")
        .unwrap();
    assert_eq!(rb["status"], "fail");
    assert!(rb["witness"].as_str().unwrap().len() > 0);
}

#[test]
fn malformed_json_is_a_parse_error() {
    let o = run(&["rb-check", &fixture("../Cargo.toml")]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr).into_owned();
    assert!(err.contains("line"), "{err}");
}

#[test]
fn cartan_w5_has_a_hundred_morphisms() {
    let o = run(&["cartan", &fixture("w5_cartan.json"), "--lwnw", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let rep: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep["artifacts"]["morphisms"], 100);
}

#[test]
fn cartan_four_cycle_rb_reports_the_path_connectivity_failure() {
    let o = run(&["cartan", &fixture("fourcycle.json"), "--rb", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    let rep: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rb = rep["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "rainbow boomerang graph")
        .unwrap();
    assert!(rb["witness"].as_str().unwrap().contains("path-simply"));
}

#[test]
fn affine_bicharacter_exhausts_the_budget() {
    let o = run(&["nichols", "build-g", &fixture("bichar_affine.json")]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn frieze_prints_rows_and_the_cartan_graph() {
    let o = run(&["frieze", "--quiddity", "2,1,3,1,2,2,1,3,1,2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("cartan graph:"), "{out}");
    assert!(out.contains("2   1   3   1   2"), "{out}");
}

#[test]
fn superalg_gl_emits_dot() {
    let o = run(&["superalg", "gl", "3", "2", "--emit", "or", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("graph"), "{out}");
    assert!(out.contains("(2,2,2)"), "{out}");
}

#[test]
fn superalg_d21a_passes() {
    let o = run(&["superalg", "d21a"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("R+ at b4"));
}

#[test]
fn nichols_dlambda_agrees_with_the_oracle() {
    let o = run(&[
        "nichols",
        "dlambda",
        &fixture("bichar_a2_zeta3.json"),
        "--lambda",
        "1,0",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let rep: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(rep["checks"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["name"] == "oracle agreement" && c["status"] == "pass"));
}

#[test]
fn nichols_verma_check_sweeps_cleanly() {
    let o = run(&[
        "nichols",
        "verma-check",
        &fixture("bichar_super_n2.json"),
        "--lambda-range",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let rep: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep["artifacts"]["weights"], 9);
}

#[test]
fn nichols_char_reports_the_dimension() {
    let o = run(&[
        "nichols",
        "char",
        &fixture("bichar_a2_zeta3.json"),
        "--lambda",
        "0,0",
        "--vertex",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let art: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(art["dimension"], 27);
}

#[test]
fn suite_json_reports_are_byte_identical() {
    let args = ["suite", "--fast", "--seed", "0", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    // Seed-independence of the verdicts, not of the samples.
    let c = run(&["suite", "--fast", "--seed", "1", "--format", "json"]);
    assert_eq!(c.status.code(), Some(0));
}
