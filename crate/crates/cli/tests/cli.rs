//! End-to-end tests driving the compiled binary: exit codes, the JSON
//! schema, determinism, and file ingestion.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grover-walk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn period_of_uc16_is_four_and_exits_zero() {
    let out = run(&["period", "uc:16"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("period 4"), "unexpected output: {text}");
    assert!(text.contains("methods agree: true"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["spectrum", "uc"],
        vec!["spectrum", "frob:3"],
        vec!["spectrum", "uc:x"],
        vec!["period", "uc:12", "--tau-max", "nope"],
        vec!["no-such-subcommand"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(1), "args {args:?}: {}", stderr(&out));
    }
}

#[test]
fn validation_errors_exit_two() {
    for args in [
        vec!["spectrum", "cycle:2"],
        vec!["period", "circulant:8:4"],
        vec!["pst", "file:/no/such/file.edges"],
        vec!["spectrum", "uc:12", "--tol-cluster", "-1.0"],
        vec!["verify", "thm36", "--n-max", "1"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty(), "args {args:?} left stderr empty");
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["pst", "--help"]).status.code(), Some(0));
}

#[test]
fn pst_json_reports_the_twelve_uc12_certificates() {
    let out = run(&["pst", "uc:12", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["command"], "pst");
    assert_eq!(doc["selector"], "uc:12");
    let pst = &doc["results"]["pst"];
    assert_eq!(pst["periodic"], true);
    assert_eq!(pst["period"], 12);
    let certs = pst["certificates"].as_array().expect("certificates array");
    assert_eq!(certs.len(), 12);
    for cert in certs {
        let source = cert["source"].as_u64().expect("source") as usize;
        assert_eq!(cert["target"], ((source + 6) % 12) as u64);
        assert_eq!(cert["time"], 6);
        assert_eq!(cert["method"], "both");
        let re: f64 = cert["phase_re"].as_str().expect("str").parse().expect("f64");
        let im: f64 = cert["phase_im"].as_str().expect("str").parse().expect("f64");
        assert!((re.hypot(im) - 1.0).abs() < 1e-9);
    }
    let diagnostics = pst["criterion"]["diagnostics"]
        .as_array()
        .expect("diagnostics");
    assert_eq!(diagnostics.len(), 12);
    let tau6 = &diagnostics[5];
    assert_eq!(tau6["tau"], 6);
    assert_eq!(tau6["all_unimodular"], true);
    assert_eq!(tau6["alternating"], true);
    assert_eq!(tau6["certified_pairs"].as_array().expect("pairs").len(), 12);
}

#[test]
fn spectrum_reads_edge_list_files() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("p3.edges");
    let mut file = std::fs::File::create(&path).expect("create");
    writeln!(file, "3 2").unwrap();
    writeln!(file, "0 1").unwrap();
    writeln!(file, "1 2").unwrap();
    drop(file);

    let selector = format!("file:{}", path.display());
    let out = run(&["spectrum", &selector, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let spectrum = &doc["results"]["spectrum"];
    assert_eq!(spectrum["vertices"], 3);
    assert_eq!(spectrum["edges"], 2);
    assert_eq!(spectrum["regular"], serde_json::Value::Null);
    assert_eq!(spectrum["bipartite"], true);
    assert_eq!(spectrum["adjacency"]["exact"], false);
    let values: Vec<f64> = spectrum["adjacency"]["entries"]
        .as_array()
        .expect("entries")
        .iter()
        .map(|e| e["value"].as_str().expect("str").parse().expect("f64"))
        .collect();
    let expected = [2.0f64.sqrt(), 0.0, -(2.0f64.sqrt())];
    assert_eq!(values.len(), 3);
    for (got, want) in values.iter().zip(expected) {
        assert!((got - want).abs() < 1e-9, "got {got}, want {want}");
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["spectrum", "named:hamming:3:3", "--format", "json"],
        vec!["verify", "thm42", "--samples", "5", "--format", "json"],
        vec!["pst", "cycle:8", "--format", "csv"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.status.code(), Some(0), "args {args:?}");
        assert_eq!(
            first.stdout, second.stdout,
            "args {args:?} not deterministic"
        );
    }
}

#[test]
fn verify_thm46_passes_and_reports_checks() {
    let out = run(&["verify", "thm46", "--n-max", "16", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let verify = &doc["results"]["verify"];
    assert_eq!(verify["all_pass"], true);
    let checks = verify["checks"].as_array().expect("checks");
    assert_eq!(checks.len(), 2);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn circulant_selector_closes_the_connection_set() {
    // circulant:8:1,3 must be read as {1, 3, 5, 7} = UC(8): periodic with
    // period 4.
    let out = run(&["period", "circulant:8:1,3"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("period 4"));
}

#[test]
fn complete_graph_spectrum_is_exact_via_circulant_form() {
    let out = run(&["spectrum", "complete:4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let spectrum = &doc["results"]["spectrum"];
    assert_eq!(spectrum["adjacency"]["exact"], true);
    assert_eq!(spectrum["regular"], 3);
    let entries = spectrum["adjacency"]["entries"].as_array().expect("entries");
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["multiplicity"], 1);
    assert_eq!(entries[1]["multiplicity"], 3);
}
