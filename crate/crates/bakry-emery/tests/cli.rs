//! End-to-end tests of the command-line interface: output shapes, exit
//! codes, and determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bakry-emery"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn write_k4(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("k4.edges");
    std::fs::write(&path, "x a\nx b\nx c\na b\na c\nb c\n").unwrap();
    path
}

#[test]
fn curvature_text_output_is_six_decimals() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_k4(dir.path());
    let out = run(&["curvature", file.to_str().unwrap(), "--vertex", "x"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3.000000\n");
}

#[test]
fn curvature_json_is_full_precision() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_k4(dir.path());
    let out = run(&[
        "curvature",
        file.to_str().unwrap(),
        "--vertex",
        "a",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["vertex"], "a");
    assert_eq!(v["method"], "schur");
    assert!((v["curvature"].as_f64().unwrap() - 3.0).abs() < 1e-9);
    assert!(v["minimizer"].as_object().unwrap().contains_key("a"));
}

#[test]
fn curvature_verify_reports_both_methods() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_k4(dir.path());
    let out = run(&["curvature", file.to_str().unwrap(), "--vertex", "x", "--verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("schur     3.000000"));
    assert!(text.contains("bisection 3.000000"));

    let out = run(&[
        "curvature",
        file.to_str().unwrap(),
        "--vertex",
        "x",
        "--verify",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["difference"].as_f64().unwrap() <= 1e-7);
}

#[test]
fn unknown_vertex_exits_2_and_names_it() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_k4(dir.path());
    let out = run(&["curvature", file.to_str().unwrap(), "--vertex", "zz"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown vertex"));
    assert!(stderr(&out).contains("zz"));
}

#[test]
fn malformed_file_exits_2_and_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.edges");
    std::fs::write(&path, "a b\nc d e\n").unwrap();
    let out = run(&["curvature", path.to_str().unwrap(), "--vertex", "a"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn missing_file_exits_2() {
    let out = run(&["curvature", "/no/such/file", "--vertex", "a"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tiling_row_matches_reference_values() {
    let out = run(&["tiling", "--order", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("smooth curvature:   -2.336529"));
    assert!(text.contains("discrete curvature: -3.242641"));
}

#[test]
fn tiling_order_six_is_doubly_flat() {
    let out = run(&["tiling", "--order", "6"]);
    let text = stdout(&out);
    assert!(text.contains("smooth curvature:   0.000000"));
    assert!(text.contains("discrete curvature: -0.000000") || text.contains("discrete curvature: 0.000000"));
}

#[test]
fn invalid_order_exits_2() {
    let out = run(&["tiling", "--order", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("invalid tiling order"));
}

#[test]
fn table_csv_has_reference_rows() {
    let out = run(&["table", "--format", "csv"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert!(csv.starts_with("order,smooth_curvature,discrete_curvature\n"));
    assert!(csv.contains("5,1.226,2.146\n"));
    assert!(csv.contains("9,-3.441,-4.596\n"));
}

#[test]
fn table_output_is_byte_identical_across_runs() {
    for format in ["text", "csv", "json"] {
        let a = run(&["table", "--format", format]);
        let b = run(&["table", "--format", format]);
        assert_eq!(a.stdout, b.stdout, "format {format}");
    }
}

#[test]
fn table_json_round_trips() {
    let out = run(&["table", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.len(), 7);
    for row in &rows {
        assert_eq!(row["sign_match"], true);
    }
    assert!((rows[4]["discrete_curvature"].as_f64().unwrap() - (-1.7409388)).abs() < 1e-6);
}

#[test]
fn table_text_appends_verdicts() {
    let out = run(&["table"]);
    let text = stdout(&out);
    assert!(text.contains("sign agreement: 7/7 rows"));
    assert!(text.contains("monotonicity: smooth decreasing, discrete decreasing"));
}

#[test]
fn ball_emits_a_parsable_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ball4.edges");
    let out = run(&["ball", "--order", "4", "--emit", path.to_str().unwrap()]);
    assert!(out.status.success());

    let text = std::fs::read_to_string(&path).unwrap();
    let g = bakry_emery::Graph::from_edge_list(&text).unwrap();
    assert_eq!(g.vertex_count(), 6);
    assert_eq!(g.edge_count(), 12);

    // emitted graph feeds back into the curvature command
    let out = run(&["curvature", path.to_str().unwrap(), "--vertex", "x", "--verify"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("schur     3.000000"));
}

#[test]
fn tiling_emit_writes_the_ball() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ball7.edges");
    let out = run(&["tiling", "--order", "7", "--emit", path.to_str().unwrap()]);
    assert!(out.status.success());
    let g = bakry_emery::Graph::from_edge_list(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g.vertex_count(), 29);
}
