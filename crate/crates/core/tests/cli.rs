use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn ybmaps(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybmaps"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_input(name: &str, v: &Value) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn map_eval_adler_yamilov() {
    let input = write_input(
        "ay.json",
        &json!({"x": {"coords": [1, 1], "params": [3]}, "y": {"coords": [1, 1], "params": [1]}}),
    );
    let o = ybmaps(&[
        "map",
        "eval",
        "--map",
        "adler-yamilov",
        "--input",
        input.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["u"]["coords"], json!(["0+0i", "1+0i"]));
    assert_eq!(v["v"]["coords"], json!(["1+0i", "2+0i"]));
}

#[test]
fn map_eval_general_with_b() {
    let input = write_input(
        "general.json",
        &json!({"x": [2, 1, 1, 1], "y": [1, 2, 1, 4], "b": "identity"}),
    );
    let o = ybmaps(&[
        "map",
        "eval",
        "--map",
        "general",
        "--input",
        input.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(
        v["u"]["coords"],
        json!(["0+0i", "3/2+0i", "-2/3+0i", "3+0i"])
    );
}

#[test]
fn map_eval_float_family() {
    let input = write_input(
        "kdv-family.json",
        &json!({"x": {"coords": [1, 2], "params": [3]}, "y": {"coords": [0, 1], "params": [1]}, "epsilon": 0.001}),
    );
    let o = ybmaps(&[
        "map",
        "eval",
        "--map",
        "kdv-family",
        "--field",
        "complex64",
        "--input",
        input.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let u1: num_complex::Complex64 = stdout_json(&o)["u"]["coords"][0]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert!((u1.re - 1.0).abs() < 1e-2);
}

#[test]
fn map_eval_domain_error_exits_nonzero() {
    let input = write_input(
        "pole.json",
        &json!({"x": {"coords": [1, 0], "params": [2]}, "y": {"coords": [0, -1], "params": [1]}}),
    );
    let o = ybmaps(&[
        "map",
        "eval",
        "--map",
        "kdv-lift",
        "--input",
        input.to_str().unwrap(),
    ]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("pole"));
}

#[test]
fn catalog_lists_everything() {
    let o = ybmaps(&["catalog", "list"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    let names = |k: &str| -> Vec<String> {
        v[k].as_array()
            .unwrap()
            .iter()
            .map(|e| e["name"].as_str().unwrap().to_string())
            .collect()
    };
    assert!(names("charts").contains(&"sl2".to_string()));
    assert!(names("maps").contains(&"kdv-lift".to_string()));
    assert!(names("suites").contains(&"yb-cube/general-identity-B".to_string()));
}

#[test]
fn verify_single_suite_to_stdout() {
    let o = ybmaps(&[
        "verify",
        "--suite",
        "yb-cube/general-identity-B",
        "--trials",
        "5",
    ]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["suite"], "yb-cube/general-identity-B");
    assert_eq!(v["trials"]["attempted"], 5);
}

#[test]
fn verify_unknown_suite_fails() {
    let o = ybmaps(&["verify", "--suite", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite"));
}
