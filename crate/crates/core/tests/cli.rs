use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use gmhodge::cli::Response;

const QUINTIC: [&str; 6] = ["--vars", "x", "--weights", "1", "--poly", "x^5-5*x"];
const TRIANGLE: [&str; 6] = ["--vars", "x,y", "--weights", "1,1", "--poly", "x^2*y+x*y^2-x*y"];
const CUBIC_PAIR: [&str; 6] = ["--vars", "x,y", "--weights", "1,1", "--poly", "2*x^3+2*y^3-3*x^2-3*y^2"];
const QUARTIC: [&str; 6] = ["--vars", "x,y", "--weights", "1,1", "--poly", "x^4+y^4-x"];

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn gmhodge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gmhodge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gmhodge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn check(example: &[&str], extra: &[&str], file: &str) {
    let args: Vec<&str> = example.iter().chain(extra).copied().collect();
    let out = gmhodge(&args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(file), "{file}");
}

#[test]
fn quintic_goldens() {
    check(&QUINTIC, &["okbase"], "quintic_okbase.txt");
    check(&QUINTIC, &["abeta"], "quintic_abeta.txt");
    check(&QUINTIC, &["s"], "quintic_s.txt");
    check(&QUINTIC, &["nablamat"], "quintic_nablamat.txt");
    check(&QUINTIC, &["pfeq", "--form", "1"], "quintic_pfeq.txt");
}

#[test]
fn triangle_goldens() {
    check(&TRIANGLE, &["okbase"], "triangle_okbase.txt");
    check(&TRIANGLE, &["s"], "triangle_s.txt");
    check(&TRIANGLE, &["muldf", "--generic"], "triangle_muldf.txt");
    check(&TRIANGLE, &["nablamat", "--s", "t^2+t/27"], "triangle_nablamat.txt");
    check(&TRIANGLE, &["dbeta", "--generic"], "triangle_dbeta_generic.txt");
    check(&TRIANGLE, &["dbeta"], "triangle_dbeta.txt");
    check(&TRIANGLE, &["imk", "--generic"], "triangle_imk_generic.txt");
    check(&TRIANGLE, &["imk"], "triangle_imk.txt");
    check(&TRIANGLE, &["changebase", "--generic"], "triangle_changebase_generic.txt");
    check(&TRIANGLE, &["changebase"], "triangle_changebase.txt");
    check(&TRIANGLE, &["pfeq", "--s", "t^2+t/27"], "triangle_pfeq.txt");
}

#[test]
fn cubic_pair_goldens() {
    check(&CUBIC_PAIR, &["okbase"], "cubic_pair_okbase.txt");
    check(&CUBIC_PAIR, &["s"], "cubic_pair_s.txt");
    check(&CUBIC_PAIR, &["changebase", "--s", "t*(t+1)*(t+2)"], "cubic_pair_changebase.txt");
}

#[test]
fn quartic_goldens() {
    check(&QUARTIC, &["okbase"], "quartic_okbase.txt");
    check(&QUARTIC, &["sqfree-s"], "quartic_sqfree_s.txt");
    check(&QUARTIC, &["dbeta", "--generic"], "quartic_dbeta_generic.txt");
    check(&QUARTIC, &["imk", "--generic"], "quartic_imk_generic.txt");
    check(&QUARTIC, &["changebase", "--generic"], "quartic_changebase_generic.txt");
}

#[test]
fn errors_exit_nonzero() {
    let out = gmhodge(&["--vars", "x,y", "--poly", "x^^2", "okbase"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("column 3"));

    let out = gmhodge(&["--vars", "x,y", "--poly", "x^2*y^2", "okbase", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let resp: Response = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!resp.ok && resp.result.is_none());

    let out = gmhodge(&["--vars", "x,t", "--poly", "x^2+t^2", "okbase"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn json_output_round_trips() {
    let out = gmhodge(&[&QUARTIC[..], &["changebase", "--generic", "--format", "json"]].concat());
    assert!(out.status.success());
    let resp: Response = serde_json::from_slice(&out.stdout).unwrap();
    assert!(resp.ok && resp.diagnostics.is_empty());
    let again: Response = serde_json::from_str(&serde_json::to_string(&resp).unwrap()).unwrap();
    assert_eq!(again, resp);
}

#[test]
fn batch_of_examples() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let out = gmhodge(&["batch", dir.join("batch_examples.jsonl").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("batch_examples.expected.jsonl"));
}

#[test]
fn batch_isolates_failures() {
    let out = with_stdin(&["batch", "-"], &golden("batch_mixed.jsonl"));
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, golden("batch_mixed.expected.jsonl"));
    let ok: Vec<bool> = text
        .lines()
        .map(|l| serde_json::from_str::<Response>(l).unwrap().ok)
        .collect();
    assert_eq!(ok, [true, false, false, true]);
}

#[test]
fn empty_batch() {
    let out = with_stdin(&["batch", "-"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}
