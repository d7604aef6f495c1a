//! End-to-end checks of the `dejonq` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn dejonq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dejonq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = dejonq(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn bitangent_row() {
    let row = json(&[
        "count", "--g", "3", "--r", "2", "--d", "4", "--mu", "2,2", "--format", "json",
    ]);
    assert_eq!(row["result"]["value"], 28);
    assert_eq!(row["paths"], serde_json::json!(["bracket", "coefficient"]));
    assert_eq!(row["cross_check_delta"], 0);
    assert_eq!(row["status"], "ok");
}

#[test]
fn power_notation_matches_list() {
    let a = dejonq(&[
        "count", "--g", "5", "--r", "2", "--d", "7", "--mu", "2^2,1^3",
    ]);
    let b = dejonq(&[
        "count",
        "--g",
        "5",
        "--r",
        "2",
        "--d",
        "7",
        "--mu",
        "1,2,1,1,2",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn trigonal_pencil_has_no_triple_point() {
    let row = json(&[
        "empty", "--g", "4", "--r", "1", "--d", "3", "--mu", "3", "--f", "2", "--format", "json",
    ]);
    assert_eq!(row["result"]["empty"], true);
}

#[test]
fn span_spec_derives_f() {
    let by_value = dejonq(&[
        "dim", "--g", "5", "--r", "4", "--d", "8", "--mu", "2,2", "--f", "1",
    ]);
    let by_span = dejonq(&[
        "dim", "--g", "5", "--r", "4", "--d", "8", "--mu", "2,2", "--f", "span=2",
    ]);
    assert_eq!(by_value.status.code(), Some(0));
    assert_eq!(by_value.stdout, by_span.stdout);
}

#[test]
fn identity_summary() {
    let out = dejonq(&["identity", "--samples", "1000", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1000/1000 identity holds\n");
}

#[test]
fn validation_errors_exit_2() {
    for args in [
        &["count", "--g", "3", "--r", "2", "--d", "5", "--mu", "2,2"][..],
        &["count", "--g", "3", "--r", "2", "--d", "4", "--mu", "2,x"],
        &["count", "--g", "3", "--r", "2", "--d", "4", "--mu", "2,0,2"],
        &[
            "empty", "--g", "4", "--r", "1", "--d", "3", "--mu", "3", "--f", "9",
        ],
        &[
            "sweep", "--g", "3..1", "--r", "1", "--d", "4", "--mu", "2,2",
        ],
        &["count", "--g", "3"],
    ] {
        let out = dejonq(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn sweep_reports_negative_rho_per_row() {
    let rows = json(&[
        "sweep", "--of", "empty", "--g", "0..5", "--r", "2", "--d", "4", "--mu", "2,2", "--f", "2",
    ]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let statuses: Vec<&str> = rows.iter().map(|r| r["status"].as_str().unwrap()).collect();
    assert!(statuses.contains(&"hypothesis_violation"), "{statuses:?}");
    assert!(statuses.contains(&"ok"), "{statuses:?}");
}

fn flatten_json(row: &Value) -> Vec<(String, String)> {
    let scalar = |v: &Value| match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let mut out = Vec::new();
    for section in ["inputs", "result"] {
        for (k, v) in row[section].as_object().unwrap() {
            out.push((k.clone(), scalar(v)));
        }
    }
    let paths: Vec<&str> = row["paths"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p.as_str().unwrap())
        .collect();
    out.push(("paths".into(), paths.join(";")));
    out.push((
        "cross_check_delta".into(),
        scalar(&row["cross_check_delta"]),
    ));
    out.push(("status".into(), scalar(&row["status"])));
    out
}

#[test]
fn csv_and_json_carry_the_same_records() {
    for kind in ["count", "dim", "empty", "plucker"] {
        let mut args = vec![
            "sweep",
            "--of",
            kind,
            "--g",
            "0..4",
            "--r",
            "1..2",
            "--d",
            "2..6",
            "--mu",
            "double-points",
        ];
        if kind == "dim" || kind == "empty" {
            args.extend(["--f", "0", "--f", "m-r"]);
        }
        let rows = json(&[&args[..], &["--format", "json"]].concat());
        let csv_out = dejonq(&[&args[..], &["--format", "csv"]].concat());
        assert_eq!(csv_out.status.code(), Some(0));
        let mut reader = csv::Reader::from_reader(csv_out.stdout.as_slice());
        let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
        let csv_rows: Vec<Vec<(String, String)>> = reader
            .records()
            .map(|rec| {
                header
                    .iter()
                    .cloned()
                    .zip(rec.unwrap().iter().map(String::from))
                    .collect()
            })
            .collect();
        let json_rows: Vec<_> = rows.as_array().unwrap().iter().map(flatten_json).collect();
        assert!(!json_rows.is_empty());
        assert_eq!(csv_rows, json_rows, "{kind}");
    }
}

#[test]
fn sweep_output_is_reproducible() {
    let args = [
        "sweep", "--of", "plucker", "--g", "0..5", "--r", "1..3", "--d", "1..8", "--format", "csv",
    ];
    assert_eq!(dejonq(&args).stdout, dejonq(&args).stdout);
}
