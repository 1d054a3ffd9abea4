use std::path::Path;
use std::process::Command;

use bga_core::fixtures::{annulus, rules_json, ANNULUS_RULES};
use serde_json::Value;

fn bga(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bga")).args(args).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v, text)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn info_on_ex1() {
    let (code, v, _) = bga(&["info", "--fixture", "ex1"]);
    assert_eq!(code, 0);
    assert_eq!((v["dim"].as_u64(), v["formula"].as_u64(), v["match"].as_bool()), (Some(7), Some(7), Some(true)));
}

#[test]
fn hh2_on_annulus_documents() {
    let dir = tempfile::tempdir().unwrap();
    let graph = write(dir.path(), "annulus.json", &annulus().to_json());
    let rules = write(dir.path(), "rules.json", &rules_json(ANNULUS_RULES));
    let (code, v, _) = bga(&["hh2", "--input", &graph, "--rules", &rules]);
    assert_eq!(code, 0);
    assert_eq!(v["hh2_dim"], 5);
    assert_eq!(v["basis"].as_array().unwrap().len(), 5);
}

#[test]
fn type_a_deformation_is_semisimple() {
    let (code, v, _) = bga(&["deform", "--fixture", "ex1", "--deform-type", "A", "--check-semisimple"]);
    assert_eq!(code, 0);
    assert_eq!(v["formal"]["passed"], true);
    assert_eq!(v["semisimplicity"]["radical_dim"], 0);
    assert_eq!(v["semisimplicity"]["dimension"], 7);
}

#[test]
fn deformation_request_document() {
    let dir = tempfile::tempdir().unwrap();
    let req = write(dir.path(), "req.json", r#"{"type": "B", "params": {"vertex": "v2"}, "t": "formal:3"}"#);
    let (code, v, _) = bga(&["deform", "--fixture", "ex1", "--request", &req]);
    assert_eq!(code, 0);
    assert_eq!(v["formal"]["degree"], 3);
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("hh2.json");
    let (code, _, _) = bga(&["hh2", "--fixture", "dbl", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let first = std::fs::read_to_string(&out).unwrap();
    let (_, _, again) = bga(&["hh2", "--fixture", "dbl"]);
    assert_eq!(first, again);
    let (_, v, _) = bga(&["hh2", "--fixture", "dbl"]);
    assert_eq!(v["hh2_dim"], 6);
    assert_eq!(v["formula_matches"], true);
}

#[test]
fn failed_diamond_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let rules = write(dir.path(), "rules.json", r#"[{"tip": "x*y", "replacement": "x"}, {"tip": "y*x", "replacement": "0"}]"#);
    let (code, v, _) = bga(&["diamond", "--fixture", "annulus", "--rules", &rules]);
    assert_eq!(code, 1);
    assert_eq!(v["passed"], false);
}

#[test]
fn input_errors_exit_two_with_a_code() {
    let (code, v, _) = bga(&["info", "--fixture", "annulus", "--bipartition", "v|"]);
    assert_eq!((code, v["error"].as_str()), (2, Some("InvalidBipartition")));
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"vertices": []}"#);
    let (code, v, _) = bga(&["validate", "--input", &bad]);
    assert_eq!((code, v["error"].as_str()), (2, Some("SchemaError")));
    let (code, v, _) = bga(&["cocycles", "--fixture", "torus"]);
    assert_eq!((code, v["error"].as_str()), (2, Some("NotApplicable")));
}

#[test]
fn selftest_passes_and_lists_differences() {
    let (code, v, _) = bga(&["selftest"]);
    assert_eq!(code, 0);
    assert_eq!(v["hh2_differs_from_expected"], serde_json::json!(["torus", "ann2"]));
}
