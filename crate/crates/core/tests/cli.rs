//! End-to-end command-line tests. Commands run in process through
//! `cli::run`, with stdout and stderr captured in byte buffers.

use std::io::Write as _;
use std::path::PathBuf;

use findex::cli::run;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn findex(args: &[&str]) -> Outcome {
    let mut argv = vec!["findex"];
    argv.extend_from_slice(args);
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = run(argv, &mut stdout, &mut stderr);
    Outcome {
        code,
        stdout: String::from_utf8(stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(stderr).expect("utf-8 stderr"),
    }
}

fn write_graph(dir: &tempfile::TempDir, name: &str, doc: &str) -> PathBuf {
    let path = dir.path().join(name);
    let mut file = std::fs::File::create(&path).unwrap();
    file.write_all(doc.as_bytes()).unwrap();
    path
}

fn fixtures(dir: &tempfile::TempDir) -> (String, String) {
    let p2 = write_graph(dir, "p2.txt", "n 2\n0 1\n");
    let p3 = write_graph(dir, "p3.txt", "n 3\n0 1\n1 2\n");
    (
        p2.to_str().unwrap().to_owned(),
        p3.to_str().unwrap().to_owned(),
    )
}

#[test]
fn indices_prints_one_json_object() {
    let dir = tempfile::tempdir().unwrap();
    let (_, p3) = fixtures(&dir);
    let out = findex(&["indices", &p3]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    let value: serde_json::Value = serde_json::from_str(out.stdout.trim()).unwrap();
    assert_eq!(value["n"], 3);
    assert_eq!(value["m"], 2);
    assert_eq!(value["m1"], "6");
    assert_eq!(value["m2"], "4");
    assert_eq!(value["f"], "10");
    assert_eq!(value["hm"], "18");
    assert_eq!(value["rezm"], "12");
    assert_eq!(value["xi4"], "18");
}

#[test]
fn derive_prints_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let (_, p3) = fixtures(&dir);
    let out = findex(&["derive", &p3, "--kind", "S"]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert_eq!(out.stdout, "n 5\n0 3\n1 3\n1 4\n2 4\n");
}

#[test]
fn derive_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let (_, p3) = fixtures(&dir);
    let target = dir.path().join("out.txt");
    let out = findex(&["derive", &p3, "--kind", "R", "-o", target.to_str().unwrap()]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert_eq!(out.stdout, "");
    let written = std::fs::read_to_string(&target).unwrap();
    assert_eq!(written, "n 5\n0 1\n0 3\n1 2\n1 3\n1 4\n2 4\n");
}

#[test]
fn product_lex_of_two_edges_is_complete() {
    let dir = tempfile::tempdir().unwrap();
    let (p2, _) = fixtures(&dir);
    let out = findex(&["product", &p2, &p2, "--kind", "lex"]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert_eq!(out.stdout, "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
}

#[test]
fn formula_prints_plain_decimal() {
    let dir = tempfile::tempdir().unwrap();
    let (p2, p3) = fixtures(&dir);
    let corrected = findex(&["formula", "--theorem", "T4-corrected", &p3, &p2]);
    assert_eq!(corrected.code, 0, "stderr: {}", corrected.stderr);
    assert_eq!(corrected.stdout, "2822\n");
    let printed = findex(&["formula", "--theorem", "T4-printed", &p3, &p2]);
    assert_eq!(printed.code, 0);
    assert_eq!(printed.stdout, "1222\n");
}

#[test]
fn example1_matches_brute_force_anchor() {
    let out = findex(&["example1", "--op", "S", "--n", "2", "--m", "2"]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert_eq!(out.stdout, "236\n");
}

#[test]
fn verify_families_grid_reports_gaps_but_exits_clean() {
    let out = findex(&["verify", "--paths", "3", "2"]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    let summary: serde_json::Value = serde_json::from_str(lines.last().unwrap()).unwrap();
    assert_eq!(summary["type"], "summary");
    assert_eq!(summary["checked"], 8);
    assert_eq!(summary["mismatches"], 0);
    assert_eq!(summary["t4_printed_checked"], 2);
    assert_eq!(summary["t4_printed_mismatches"], 2);
    assert_eq!(summary["t4_printed_equals_t3"], true);
    assert_eq!(summary["polynomial_checked"], 8);
    assert_eq!(summary["polynomial_mismatches"], 2);
    // 10 pair records + 8 polynomial records + summary
    assert_eq!(lines.len(), 19);
    let first: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(first["type"], "record");
    assert_eq!(first["g1"], "path(2)");
    assert_eq!(first["theorem"], "T1");
    assert_eq!(first["match"], true);
}

#[test]
fn verify_exhaustive_covers_all_small_connected_pairs() {
    let out = findex(&[
        "verify",
        "--mode",
        "exhaustive",
        "--max-n1",
        "3",
        "--max-n2",
        "3",
    ]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    let summary: serde_json::Value =
        serde_json::from_str(out.stdout.lines().last().unwrap()).unwrap();
    assert_eq!(summary["checked"], 144);
    assert_eq!(summary["mismatches"], 0);
    assert_eq!(summary["t4_printed_checked"], 36);
    assert_eq!(summary["t4_printed_mismatches"], 30);
}

#[test]
fn verify_random_mode_is_reproducible() {
    let args = ["verify", "--samples", "6", "--seed", "7"];
    let first = findex(&args);
    let second = findex(&args);
    assert_eq!(first.code, 0, "stderr: {}", first.stderr);
    assert_eq!(first.stdout, second.stdout);
    let with_threads = findex(&["verify", "--samples", "6", "--seed", "7", "--threads", "3"]);
    assert_eq!(with_threads.stdout, first.stdout);
}

#[test]
fn verify_rejects_conflicting_flags() {
    let out = findex(&["verify", "--mode", "exhaustive", "--paths", "4", "4"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--paths"), "stderr: {}", out.stderr);
    let out = findex(&["verify", "--paths", "4", "4", "--samples", "9"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--samples"), "stderr: {}", out.stderr);
    let out = findex(&["verify", "--paths", "1", "4"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("at least 2"), "stderr: {}", out.stderr);
}

#[test]
fn unknown_flags_and_bad_values_exit_with_usage_error() {
    let out = findex(&["verify", "--bogus"]);
    assert_eq!(out.code, 2);
    assert!(
        out.stderr.contains("unexpected argument"),
        "stderr: {}",
        out.stderr
    );
    let dir = tempfile::tempdir().unwrap();
    let (_, p3) = fixtures(&dir);
    let out = findex(&["derive", &p3, "--kind", "X"]);
    assert_eq!(out.code, 2);
    assert!(
        out.stderr.contains("invalid value"),
        "stderr: {}",
        out.stderr
    );
}

#[test]
fn runtime_failures_exit_one_with_diagnostic() {
    let out = findex(&["indices", "/nonexistent/graph.txt"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error: "), "stderr: {}", out.stderr);
    assert!(out.stderr.contains("/nonexistent/graph.txt"));
    assert_eq!(out.stdout, "");
}

#[test]
fn malformed_input_names_the_offending_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_graph(&dir, "bad.txt", "n 3\n0 1\n0 1\n");
    let out = findex(&["indices", bad.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 3"), "stderr: {}", out.stderr);
    assert!(
        out.stderr.contains("duplicate edge"),
        "stderr: {}",
        out.stderr
    );
}

#[test]
fn help_prints_to_stdout_and_exits_zero() {
    let out = findex(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verify"), "stdout: {}", out.stdout);
    assert_eq!(out.stderr, "");
}
