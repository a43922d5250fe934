//! End-to-end runs of the `threegap` binary.

use std::process::{Command, Output};

use threegap_core::{SymmetryReport, CheckReport};

fn threegap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_threegap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn word_command() {
    let out = threegap(&["word", "--alpha", "sqrt:2", "--n", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "acabacabab\n");

    let out = threegap(&["word", "--alpha", "sqrt:2", "--n", "1"]);
    assert_eq!(stdout(&out), "a\n");

    let out = threegap(&["word", "--alpha", "golden", "--n", "5", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["alpha"], "golden");
    assert_eq!(doc["n"], 5);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["word", "--alpha", "sqrt:2"][..],
        &["word", "--alpha", "sqrt:16", "--n", "3"],
        &["word", "--alpha", "nonsense", "--n", "3"],
        &["word", "--alpha", "sqrt:2", "--n", "0"],
        &["frobnicate", "--alpha", "sqrt:2"],
        &["word", "--alpha", "sqrt:2", "--n", "3", "--format", "xml"],
        &["render", "--alpha", "sqrt:2", "--n", "20", "--max-points", "10"],
    ] {
        let out = threegap(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn symcheck_json_carries_the_printed_word() {
    for n in ["27", "67", "100"] {
        let word = stdout(&threegap(&["word", "--alpha", "sqrt:2", "--n", n]));
        let out = threegap(&["symcheck", "--alpha", "sqrt:2", "--n", n, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0));
        let report: SymmetryReport = serde_json::from_str(stdout(&out).trim()).unwrap();
        assert_eq!(report.word, word.trim());
        assert!(report.overall);
    }
}

#[test]
fn symcheck_sweep_stream() {
    for engine in ["oracle", "incremental"] {
        let out = threegap(&[
            "symcheck", "--alpha", "sqrt:2", "--n-max", "500", "--format", "json", "--engine", engine,
        ]);
        assert_eq!(out.status.code(), Some(0));
        let reports: Vec<SymmetryReport> = stdout(&out)
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(reports.len(), 500);
        assert!(reports.iter().enumerate().all(|(i, r)| r.n == i + 1 && r.overall));
    }
}

#[test]
fn props_sweep_has_no_failures() {
    let out = threegap(&["props", "--alpha", "sqrt:3", "--n-max", "300", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<CheckReport> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(reports.iter().any(|r| r.check_name == "prop2"));
    assert!(reports.iter().all(|r| !r.failed()));
}

#[test]
fn verify_exits_zero() {
    let out = threegap(&["verify", "--alpha", "golden", "--n-max", "2500"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("pass"));
}

#[test]
fn gap_and_point_tables() {
    let out = threegap(&["gaps", "--alpha", "sqrt:2", "--n", "27", "--format", "csv"]);
    let text = stdout(&out);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let letters: String = rows
        .records()
        .map(|r| r.unwrap()[4].to_string())
        .collect();
    assert_eq!(letters, "babacababaababacababaababaa");

    let out = threegap(&["points", "--alpha", "sqrt:2", "--n", "4", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let visit: Vec<u64> = rows.as_array().unwrap().iter().map(|r| r["u_j"].as_u64().unwrap()).collect();
    assert_eq!(visit, [0, 3, 1, 2]);

    let out = threegap(&["gaps", "--alpha", "sqrt:2", "--n", "4"]);
    assert!(stdout(&out).contains("0.414213562373"));
}

#[test]
fn relabel_formats() {
    let out = threegap(&["relabel", "--alpha", "golden", "--n-max", "100", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["relabeling_times"], serde_json::json!([2, 3, 5, 8, 13, 21, 34, 55, 89]));
}

#[test]
fn render_writes_deterministic_svg() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.svg");
    let second = dir.path().join("second.svg");
    for path in [&first, &second] {
        let out = threegap(&["render", "--alpha", "sqrt:2", "--n", "27", "--output", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let svg = std::fs::read(&first).unwrap();
    assert_eq!(svg, std::fs::read(&second).unwrap());
    let svg = String::from_utf8(svg).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches(r#"class="point""#).count(), 27);
}
