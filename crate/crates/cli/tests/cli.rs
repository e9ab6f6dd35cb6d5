use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

fn cotan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cotan")).args(args).env_remove("COTAN_JOBS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn complex_file(json: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn cycle_json(n: usize) -> String {
    let facets: Vec<String> = (0..n).map(|i| format!("[{},{}]", i, (i + 1) % n)).collect();
    format!("{{\"n\": {n}, \"facets\": [{}]}}", facets.join(","))
}

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

#[test]
fn pentagon_vanishes() {
    let f = complex_file(&cycle_json(5));
    let out = cotan(&["t2", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "# field Q\nVANISHES\n");
}

#[test]
fn heptagon_has_a_witness() {
    let f = complex_file(&cycle_json(7));
    let out = cotan(&["t2", "--witness", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("A={} b={0,3} dimT2=1"), "{text}");
    assert!(text.contains("dimT1="), "{text}");
}

#[test]
fn reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cotan"))
        .args(["--field", "gf2", "t2", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(cycle_json(4).as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "# field GF(2)\nVANISHES\n");
}

#[test]
fn bad_input_is_a_usage_error() {
    let f = complex_file("{\"n\": 3, \"facets\": [[0,1],");
    assert_eq!(cotan(&["t2", f.path().to_str().unwrap()]).status.code(), Some(2));
    let f = complex_file("{\"n\": 2, \"facets\": [[0,5]]}");
    assert_eq!(cotan(&["t2", f.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(cotan(&["t2", "/nonexistent/complex.json"]).status.code(), Some(2));
    assert_eq!(cotan(&["--field", "gf4", "uniform-table"]).status.code(), Some(2));
    assert_eq!(cotan(&["--jobs", "0", "uniform-table"]).status.code(), Some(2));
    assert_eq!(cotan(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn graded_table_of_points() {
    let f = complex_file("{\"n\": 5, \"facets\": [[0],[1],[2],[3],[4]]}");
    let out = cotan(&["t2-graded", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<String> = stdout(&out).lines().filter(|l| !l.starts_with('#')).map(String::from).collect();
    let t2_rows: Vec<&String> = rows.iter().filter(|r| !r.ends_with(" 0")).collect();
    assert_eq!(t2_rows.len(), 10, "{rows:?}");
    assert!(t2_rows.iter().all(|r| r.starts_with("{} {") && r.ends_with(" 2")));
}

#[test]
fn simplex_has_no_nonzero_classes() {
    let f = complex_file("{\"n\": 3, \"facets\": [[0,1,2]]}");
    let out = cotan(&["t2-graded", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().all(|l| l.starts_with('#')));
}

#[test]
fn classification_matches_golden() {
    let golden = data("../core/data/classified_26.txt");
    let out = cotan(&["classify-1d", "--max-n", "8", "--golden", golden.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.ends_with("26 classes\n"), "{text}");
    assert_eq!(text.lines().filter(|l| l.contains(" matroid ")).count(), 9);
}

#[test]
fn golden_mismatch_fails() {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(b"2 1 matroid 0-1\n9 1 - 0-1\n").unwrap();
    let out = cotan(&["classify-1d", "--max-n", "4", "--golden", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("- 9 1 - 0-1"), "{text}");
    assert!(text.contains("+ 3 1 - 1-2"), "{text}");
}

#[test]
fn write_golden_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let p = path.to_str().unwrap();
    assert_eq!(cotan(&["classify-1d", "--max-n", "5", "--golden", p, "--write-golden"]).status.code(), Some(0));
    assert_eq!(cotan(&["classify-1d", "--max-n", "5", "--golden", p]).status.code(), Some(0));
}

#[test]
fn uniform_table_passes() {
    let out = cotan(&["uniform-table", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\n6 3 2 6 6 PASS\n"), "{text}");
    assert!(text.ends_with("all PASS (204 rows)\n"));
}

#[test]
fn corank_two_passes() {
    let out = cotan(&["corank2-verify", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("all PASS\n"));
}

#[test]
fn conjecture_check_on_sample_database() {
    let db = data("data/sample.db");
    let out = cotan(&["conjecture-check", "--db", db.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.ends_with("7 matroids, 0 disagreements\n"), "{text}");
    assert!(text.contains("n=6 r=3 no no Agree"), "{text}");
}

#[test]
fn conjecture_check_by_enumeration() {
    let out = cotan(&["conjecture-check", "--enumerate", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("70 matroids, 0 disagreements\n"));
}

#[test]
fn database_errors_carry_line_numbers() {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(b"# n=4 r=2\n******\n*0000*\n").unwrap();
    let out = cotan(&["conjecture-check", "--db", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn join_check_of_pentagon_and_points() {
    let a = complex_file(&cycle_json(5));
    let b = complex_file("{\"n\": 4, \"facets\": [[0],[1],[2],[3]]}");
    let out = cotan(&["join-check", a.path().to_str().unwrap(), b.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("T2=0: left true right false join false"), "{text}");
    assert!(text.ends_with("PASS\n"));
}

#[test]
fn json_output() {
    let f = complex_file(&cycle_json(7));
    let out = cotan(&["--json", "t2", "--witness", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["vanishes"], false);
    assert_eq!(v["witness"]["dimT2"], 1);
    assert_eq!(v["witness"]["b"], serde_json::json!([0, 3]));
    assert_eq!(v["link"]["n"], 7);

    let out = cotan(&["--json", "classify-1d", "--max-n", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 21);
}

#[test]
fn output_is_deterministic() {
    let f = complex_file("{\"n\": 6, \"facets\": [[0,1],[1,2],[2,0],[3,4],[5]]}");
    let p = f.path().to_str().unwrap();
    let runs: Vec<Output> = ["1", "3", "1"]
        .iter()
        .map(|j| {
            Command::new(env!("CARGO_BIN_EXE_cotan")).args(["t2-graded", p]).env("COTAN_JOBS", j).output().unwrap()
        })
        .collect();
    assert!(runs.iter().all(|o| o.stdout == runs[0].stdout));
    let w: Vec<Output> = (0..2).map(|_| cotan(&["--jobs", "2", "t2", p])).collect();
    assert_eq!(w[0].stdout, w[1].stdout);
}
