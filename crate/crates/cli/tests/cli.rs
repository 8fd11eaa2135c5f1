use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn cts(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cts"))
        .args(args)
        .env_remove("CTS_CAPS")
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let ab = write(dir.path(), "ab.json", r#"{"alphabet": "ab", "strings": ["ab", "ab"]}"#);
    let yes = cts(&["solve", &ab, "--regex", "(ab)*"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(report(&yes)["decision"], true);
    let no = cts(&["solve", &ab, "--regex", "(aa+bb)*b"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(report(&no)["decision"], false);

    assert_eq!(cts(&["solve", &ab, "--regex", "(ab"]).status.code(), Some(2));
    assert_eq!(cts(&["solve", "missing.json", "--regex", "a"]).status.code(), Some(2));
    assert_eq!(cts(&["solve", &ab]).status.code(), Some(2));
    assert_eq!(cts(&["solve", &ab, "--regex", "(ab)*", "--solver", "nope"]).status.code(), Some(2));
    assert_eq!(cts(&["frobnicate"]).status.code(), Some(2));

    let capped = cts(&["--caps", "search_states=1", "solve", &ab, "--regex", "(ab)*", "--solver", "brute"]);
    assert_eq!(capped.status.code(), Some(3));
    let env = Command::new(env!("CARGO_BIN_EXE_cts"))
        .args(["solve", &ab, "--regex", "(ab)*", "--solver", "brute"])
        .env("CTS_CAPS", "search_states=1")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
}

#[test]
fn witness_is_one_based_and_opt_in() {
    let dir = TempDir::new().unwrap();
    let g = write(
        dir.path(),
        "g1.json",
        r#"{"alphabet": "abc",
            "vertices": [{"id": 1, "label": "a"}, {"id": 2, "label": "b"}, {"id": 3, "label": "b"}, {"id": 4, "label": "c"}],
            "edges": [[1, 2], [1, 3], [2, 4], [3, 4]]}"#,
    );
    let plain = report(&cts(&["solve", &g, "--regex", "ab*c"]));
    assert!(plain.get("witness").is_none() && plain.get("wall_ms").is_none());
    let out = cts(&["solve", &g, "--regex", "ab*c", "--witness", "--timing"]);
    let r = report(&out);
    assert_eq!(r["word"], "abbc");
    let ids: Vec<u64> = r["witness"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    assert_eq!(ids.first(), Some(&1));
    assert_eq!(ids.last(), Some(&4));
    assert!(r["wall_ms"].is_number());
    assert_eq!(r["instance"], "g1");
}

#[test]
fn spec_files_and_routing() {
    let dir = TempDir::new().unwrap();
    let inst = write(dir.path(), "s.json", r#"{"alphabet": "ab", "strings": ["ab", "ba"]}"#);
    let spec = write(
        dir.path(),
        "parity.json",
        r#"{"group": {"table": [[0, 1], [1, 0]], "mu": {"a": 1, "b": 0}, "accepting": [0]}}"#,
    );
    let r = report(&cts(&["solve", &inst, "--spec", &spec]));
    assert_eq!(r["solver"], "group");
    assert_eq!(r["decision"], true);
    assert_eq!(r["spec"], "parity");
    let r = report(&cts(&["solve", &inst, "--regex", "(ab)*+(a+b)*aa(a+b)*"]));
    assert_eq!(r["solver"], "ab-or-aa");
}

#[test]
fn classify_reports_varieties() {
    let out = cts(&["classify", "--regex", "(ab)*"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["aperiodic"], true);
    assert_eq!(r["in_da"], false);
    assert_eq!(r["in_ds"], false);
    let m = report(&cts(&["monoid", "--regex", "(a+b)*ab(a+b)*"]));
    assert!(m.is_object());
}

fn bench(dir: &Path, jobs: &str) -> String {
    let out = cts(&["bench", dir.to_str().unwrap(), "--jobs", jobs]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn generated_u3p_matches_expected() {
    let dir = TempDir::new().unwrap();
    let d = dir.path().to_str().unwrap();
    let gen = cts(&["gen-hard", "u3p", "--out", d, "--block", "10", "--triples", "2", "--source-instances", "6", "--seed", "3"]);
    assert_eq!(gen.status.code(), Some(0), "{}", String::from_utf8_lossy(&gen.stderr));
    let fixed = cts(&["gen-hard", "u3p", "--out", d, "--numbers", "3,3,4,3,3,4", "--block", "10"]);
    assert_eq!(fixed.status.code(), Some(0));
    let table = bench(dir.path(), "1");
    let mut lines = table.lines();
    assert_eq!(lines.next(), Some("id,expected,decision,agrees,solver,complete"));
    let rows: Vec<&str> = lines.collect();
    assert!(!rows.is_empty());
    for row in &rows {
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(cols[3], "true", "{row}");
    }
}

#[test]
fn bench_is_deterministic_across_jobs() {
    let dir = TempDir::new().unwrap();
    let d = dir.path().to_str().unwrap();
    let gen = cts(&["gen-hard", "ab-filter", "--out", d, "--block", "2", "--source-instances", "12", "--seed", "9"]);
    assert_eq!(gen.status.code(), Some(0), "{}", String::from_utf8_lossy(&gen.stderr));
    let one = bench(dir.path(), "1");
    let four = bench(dir.path(), "4");
    assert_eq!(one, four);
    assert!(one.lines().skip(1).all(|l| l.split(',').nth(3) == Some("true")), "{one}");
}

#[test]
fn bench_on_empty_and_unknown_dirs() {
    let dir = TempDir::new().unwrap();
    assert_eq!(bench(dir.path(), "2"), "id,expected,decision,agrees,solver,complete\n");
    write(dir.path(), "stray.txt", "x");
    let out = cts(&["bench", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
