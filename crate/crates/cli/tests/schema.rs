use std::process::Command;

use jsonschema::JSONSchema;
use serde_json::Value;

fn schema() -> JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/report.schema.json"))
        .unwrap();
    JSONSchema::compile(&serde_json::from_str(&text).unwrap()).expect("schema compiles")
}

fn output(args: &[&str]) -> Vec<u8> {
    Command::new(env!("CARGO_BIN_EXE_idealgraph"))
        .args(args)
        .output()
        .unwrap()
        .stdout
}

fn assert_valid(schema: &JSONSchema, value: &Value) {
    if let Err(errors) = schema.validate(value) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect();
        panic!("invalid report: {msgs:?}");
    }
}

#[test]
fn reports_validate() {
    let schema = schema();
    let cases: [&[&str]; 7] = [
        &["graph", "--ring", "24", "--kind", "pis", "--format", "json"],
        &["graph", "--ring", "6", "--format", "json"],
        &["analyze", "--ring", "2x2x2x2x2x2"],
        &["analyze", "--ring", "12", "--claims", "all"],
        &["ideals", "--ring", "4x6", "--format", "json"],
        &["ideals", "--ring", "7", "--format", "json"],
        &[
            "verify",
            "--claims",
            "all",
            "--nmax",
            "40",
            "--products-up-to",
            "32",
        ],
    ];
    for args in cases {
        let value: Value = serde_json::from_slice(&output(args)).unwrap();
        assert_valid(&schema, &value);
    }
}

#[test]
fn schema_rejects_malformed_reports() {
    let schema = schema();
    let mut report: Value =
        serde_json::from_slice(&output(&["graph", "--ring", "12", "--format", "json"])).unwrap();
    assert!(schema.is_valid(&report));
    report["invariants"]["girth"] = Value::from("inf");
    assert!(!schema.is_valid(&report));
    let mut verify: Value =
        serde_json::from_slice(&output(&["verify", "--claims", "C-socle", "--nmax", "12"]))
            .unwrap();
    assert!(schema.is_valid(&verify));
    let failing = verify["results"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|r| r["status"] == "fail")
        .unwrap();
    failing.as_object_mut().unwrap().remove("witness");
    assert!(!schema.is_valid(&verify));
}

#[test]
fn embedded_schema_matches_file() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/report.schema.json"))
        .unwrap();
    assert_eq!(output(&["schema"]), text.into_bytes());
}

#[test]
fn graph_report_round_trips() {
    let bytes = output(&["analyze", "--ring", "36", "--claims", "T-conn"]);
    let value: Value = serde_json::from_slice(&bytes).unwrap();
    let report: idealgraph::InvariantReport =
        serde_json::from_value(value["invariants"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), value["invariants"]);
    let results: Vec<idealgraph::theorems::ClaimResult> =
        serde_json::from_value(value["claims"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&results).unwrap(), value["claims"]);
    let vertices: Vec<&str> = value["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    for e in value["edges"].as_array().unwrap() {
        for end in e.as_array().unwrap() {
            assert!(vertices.contains(&end.as_str().unwrap()));
        }
    }
}
