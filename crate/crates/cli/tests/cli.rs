use std::fs;
use std::process::{Command, Output};

fn formwidth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_formwidth"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = formwidth(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn fw_and_witness() {
    assert_eq!(stdout(&["fw", "012012"]), "3\n");
    assert_eq!(stdout(&["fw", "abcabc", "--algo", "tree"]), "3\n");
    assert_eq!(
        stdout(&["fw", "0101012", "--witness", "--crosscheck"]),
        "5\nwitness: 012 210 012 210\n"
    );
    assert_eq!(stdout(&["fw", "0,1,2,0,2,1", "--algo", "binary"]), "3\n");
    assert_eq!(stdout(&["fw", ""]), "0\n");
}

#[test]
fn altlen() {
    assert_eq!(stdout(&["altlen", "0101012"]), "6\n");
    assert_eq!(stdout(&["altlen", "012"]), "2\n");
}

#[test]
fn enumerate_matches_first_listing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fw5.txt");
    stdout(&[
        "enumerate",
        "--fw",
        "5",
        "--letters",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    let want = include_str!("../../core/fixtures/appendix_a.txt");
    assert_eq!(fs::read_to_string(&path).unwrap(), want);
}

#[test]
fn enumerate_json_records() {
    let text = stdout(&[
        "enumerate",
        "--fw",
        "2",
        "--format",
        "json",
        "--threads",
        "1",
    ]);
    let lines: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(!lines.is_empty());
    for v in &lines {
        assert_eq!(v["fw"], 2);
        assert_eq!(v["algorithm"], "pv");
        assert!(v["sequence"].as_str().unwrap().starts_with('0'));
        assert!(v["elapsed_s"].as_f64().unwrap() >= 0.0);
    }
}

#[test]
fn abc_enum_blocks() {
    assert_eq!(
        stdout(&["abc-enum", "--blocks", "3"]),
        "100 012021021 5\n101 012021012 5\n110 012012021 5\n111 012012012 5\n"
    );
    assert_eq!(stdout(&["abc-enum", "--blocks", "12"]).lines().count(), 9);
    assert_eq!(stdout(&["abc-enum", "--blocks", "1", "--all"]), "1 012 1\n");
}

#[test]
fn verify_prop_cases() {
    let all = stdout(&["verify-prop"]);
    assert_eq!(all.matches("PASS").count(), 5);
    assert!(stdout(&["verify-prop", "--case", "3"]).contains("PASS"));
    let bad = formwidth(&["verify-prop", "--case", "9"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("unknown case"));
}

#[test]
fn golden_flags_the_anomaly() {
    let out = stdout(&["golden", "D"]);
    assert!(out.contains("flagged 010101010"), "{out}");
    assert!(stdout(&["golden", "E"]).contains("PASS"));
}

#[test]
fn bench_outputs() {
    assert_eq!(
        stdout(&["bench", "--t-max", "0"]),
        "sequence,algorithm,trial,seconds\n\nsequence,algorithm,mean_seconds\n"
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bench.csv");
    let table = stdout(&[
        "bench",
        "--t-max",
        "2",
        "--trials",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(table.contains("(abc)^2"));
    let csv = fs::read_to_string(&path).unwrap();
    assert!(csv.contains("(abc)^1,pv,"), "{csv}");
    assert!(csv.contains("(abc)^2,tree,"), "{csv}");
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(
        formwidth(&["fw", "abcacb", "--no-normalize"]).status.code(),
        Some(2)
    );
    assert_eq!(
        formwidth(&["bench", "--trials", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(formwidth(&["golden", "F"]).status.code(), Some(2));
}
