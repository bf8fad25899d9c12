use std::path::PathBuf;
use std::process::Command;

use serde_json::{json, Value};

fn workspace() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/workspace.json")
}

fn hopfkit(args: &[&str]) -> (Value, i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfkit"))
        .args(args)
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).expect("utf-8");
    let value = serde_json::from_str(&text).unwrap_or(Value::Null);
    (value, out.status.code().expect("exit code"), text)
}

fn with_ws(args: &[&str]) -> (Value, i32, String) {
    let ws = workspace();
    let mut all = vec!["--workspace", ws.to_str().unwrap()];
    all.extend_from_slice(args);
    hopfkit(&all)
}

#[test]
fn documented_examples() {
    let (_, code, text) = hopfkit(&["schur", "V4"]);
    assert_eq!((text.as_str(), code), ("{\"invariant_factors\":[2]}\n", 0));
    let (_, code, text) = with_ws(&["commutator", "QS3", "QS3"]);
    assert_eq!(code, 0);
    assert_eq!(
        text,
        "{\"dim\":3,\"grouplike_basis\":[\"e\",\"(123)\",\"(132)\"]}\n"
    );
    let (v, code, _) = with_ws(&["check", "K"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 1);
    assert!(v["axioms"].as_object().unwrap().values().all(|x| x == true));
}

#[test]
fn workspace_objects_resolve() {
    let (v, code, _) = with_ws(&["check", "C2explicit"]);
    assert_eq!((v["hopf"].clone(), code), (json!(true), 0));
    let (v, _, _) = with_ws(&["kernel", "q8v4"]);
    assert_eq!(v["grouplike_basis"], json!(["1", "-1"]));
    let (v, _, _) = with_ws(&["quotient", "QS3", "A3"]);
    assert_eq!(v["dim"], 2);
    let (v, _, _) = with_ws(&["crossed", "triv", "c4"]);
    assert_eq!(v["grouplike_group"]["invariant_factors"], json!([4]));
    let (v, _, _) = with_ws(&["crossed", "triv", "none"]);
    assert_eq!(v["grouplike_group"]["invariant_factors"], json!([2, 2]));
    let (v, code, _) = with_ws(&["cleft-analyze", "q8v4", "q8v4_s"]);
    assert_eq!(code, 0);
    assert_eq!(v["is_trivial"], false);
    assert_eq!(v["sigma"].as_array().unwrap().len(), 16);
    let (v, _, _) = with_ws(&["pi1", "q8v4", "--section", "q8v4_t"]);
    assert_eq!(v["invariant_factors"], json!([2]));
    let (v, code, _) = with_ws(&["fiveterm", "sign"]);
    assert_eq!((v["exact"].clone(), code), (json!(true), 0));
    let (v, _, _) = with_ws(&["schur", "C2xQ8"]);
    assert_eq!(v["invariant_factors"], json!([2, 2]));
    let (v, _, _) = with_ws(&["extension-report", "sign"]);
    assert_eq!(v["is_normal"], false);
}

#[test]
fn standard_names_need_no_workspace() {
    let (v, _, _) = hopfkit(&["kernel", "Q8->C2xC2"]);
    assert_eq!(v["dim"], 2);
    let (v, _, _) = hopfkit(&["eqpair", "C4->C2"]);
    assert_eq!(v["dim"], 8);
    let (v, _, _) = hopfkit(&["abelianize", "kQ8"]);
    assert_eq!(v["invariant_factors"], json!([2, 2]));
    let (d, _, _) = hopfkit(&["h2", "V4", "--backend", "direct"]);
    let (g, _, _) = hopfkit(&["h2", "V4", "--backend", "group"]);
    assert_eq!(d["invariant_factors"], g["invariant_factors"]);
}

#[test]
fn prime_field_entries_are_integers() {
    let (v, code, _) = with_ws(&["--field", "F3", "cleft-analyze", "q8v4", "q8v4_s"]);
    assert_eq!(code, 0, "{v}");
    let sigma = v["sigma"].as_array().unwrap();
    assert!(sigma.iter().any(|e| e["sigma"] == "-1"));
    let (v, _, _) = hopfkit(&["--field", "F2", "check", "kS3"]);
    assert_eq!(v["field"], "F2");
}

#[test]
fn exit_codes() {
    let (v, code, _) = hopfkit(&["schur", "nope"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["reference"], "nope");
    let (v, code, _) = with_ws(&["quotient", "QS3", "S2"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "failed_check");
    let (_, code, _) = hopfkit(&["--workspace", "/nonexistent.json", "schur", "C2"]);
    assert_eq!(code, 2);
    let (_, code, _) = with_ws(&["fiveterm", "half"]);
    assert_eq!(code, 2);
    let (_, code, _) = hopfkit(&["--max-group-order", "4", "schur", "Q8"]);
    assert_eq!(code, 1);
}

#[test]
fn invalid_workspace_names_the_reference() {
    let dir = std::env::temp_dir().join(format!("hopfkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    let text = r#"{"morphisms": {"broken": {"dom": "kC2", "cod": "kC2", "matrix": [["1", "0"], ["0", "0"]]}}}"#;
    std::fs::write(&path, text).unwrap();
    let (v, code, _) = hopfkit(&["--workspace", path.to_str().unwrap(), "schur", "C2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["reference"], "broken");
    std::fs::write(&path, "{ not json").unwrap();
    let (v, code, _) = hopfkit(&["--workspace", path.to_str().unwrap(), "schur", "C2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "json");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn indentation_only_changes_layout() {
    let (compact, _, _) = with_ws(&["fiveterm", "q8v4"]);
    let (pretty, _, text) = with_ws(&["--json-indent", "2", "fiveterm", "q8v4"]);
    assert_eq!(compact, pretty);
    assert!(text.contains("\n  \""));
}
