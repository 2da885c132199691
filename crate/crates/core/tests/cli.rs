//! End-to-end runs of the `charms` binary: output formats, exit codes,
//! and agreement with the library on small inputs.

use std::path::Path;
use std::process::{Command, Output};

use charms::counting::count_charm_bracelets;
use charms::sequences::{BinaryPair, BinarySequence};

fn charms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charms"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn data_path(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn fixture_lines(name: &str) -> (String, String) {
    let text = std::fs::read_to_string(data_path(name)).unwrap();
    let mut lines = text.lines();
    (
        lines.next().unwrap().to_string(),
        lines.next().unwrap().to_string(),
    )
}

#[test]
fn gen_lists_every_charm_bracelet() {
    let out = charms(&["gen", "--n", "5", "--k", "4"]);
    assert!(out.status.success());
    let stdout = stdout_of(&out);
    let lines: Vec<&str> = stdout.lines().collect();
    let expected = count_charm_bracelets(5, 4).unwrap().to_string();
    assert_eq!(lines.len().to_string(), expected);
    assert!(lines.contains(&"00213"));
    for absent in ["00312", "01032", "01023"] {
        assert!(!lines.contains(&absent), "{absent} is not a representative");
    }
    assert!(stderr_of(&out).contains("representative(s)"));
}

#[test]
fn gen_with_fixed_content() {
    let out = charms(&["gen", "--content", "2,1", "--mode", "necklace"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "001\n");
}

#[test]
fn count_table_matches_library() {
    let out = charms(&["count", "--n", "1..6", "--k", "2..3"]);
    assert!(out.status.success());
    let stdout = stdout_of(&out);
    let rows: Vec<&str> = stdout.lines().collect();
    assert_eq!(rows.len(), 6);
    for (row, n) in rows.iter().zip(1usize..) {
        let cells: Vec<&str> = row.split('\t').collect();
        assert_eq!(cells[0], n.to_string());
        for (cell, k) in cells[1..].iter().zip(2usize..) {
            assert_eq!(
                *cell,
                count_charm_bracelets(n, k).unwrap().to_string(),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn analyze_reports_pair_facts() {
    let (a, b) = fixture_lines("pair68.txt");
    let out = charms(&["analyze", &a, &b]);
    assert!(out.status.success());
    let stdout = stdout_of(&out);
    assert!(stdout.contains("A: length 68"));
    assert!(stdout.contains("A: row sum 6"));
    assert!(stdout.contains("B: row sum 10"));
    assert!(stdout.contains("pair: periodic golay true"));
    // 68 is not of the form 2^a 10^b 26^c, so no aperiodic pair exists.
    assert!(stdout.contains("pair: golay false"));
    assert!(stdout.contains("pair: golay number false"));
}

#[test]
fn compress_reproduces_recorded_halves() {
    let (a68, b68) = fixture_lines("pair68.txt");
    let (a34, b34) = fixture_lines("compressed34.txt");
    for (full, half) in [(a68, a34), (b68, b34)] {
        let out = charms(&["compress", "--seq", &full, "--m", "2"]);
        assert!(out.status.success());
        assert_eq!(stdout_of(&out).trim(), half);
    }
}

#[test]
fn search_finds_and_verifies_small_pairs() {
    let out = charms(&["search", "--v", "4"]);
    assert!(out.status.success());
    let stdout = stdout_of(&out);
    assert!(stdout.starts_with("search v=4 m=2:"));
    let pairs: Vec<&str> = stdout
        .lines()
        .filter_map(|l| l.strip_prefix("pair: "))
        .collect();
    assert!(!pairs.is_empty());
    for line in pairs {
        let mut parts = line.split_whitespace();
        let a: BinarySequence = parts.next().unwrap().parse().unwrap();
        let b: BinarySequence = parts.next().unwrap().parse().unwrap();
        assert!(BinaryPair::new(a, b).unwrap().is_periodic_golay());
    }
}

#[test]
fn search_config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("search.toml");
    std::fs::write(&config, "v = 18\n").unwrap();
    let report = dir.path().join("report.json");
    // The flag wins over the file value, so the run is at v = 4.
    let out = charms(&[
        "search",
        "--config",
        config.to_str().unwrap(),
        "--v",
        "4",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).starts_with("search v=4"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["v"], 4);
    assert!(!json["pairs"].as_array().unwrap().is_empty());
}

#[test]
fn lift_expands_compressed_pair() {
    // [2, 0] forces both lifted halves to start +, +; the zero entry
    // splits two ways per side, and all four combinations verify.
    let out = charms(&["lift", "--a", "2,0", "--b", "2,0", "--v", "4"]);
    assert!(out.status.success());
    let stdout = stdout_of(&out);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    for line in lines {
        let mut parts = line.split_whitespace();
        let a: BinarySequence = parts.next().unwrap().parse().unwrap();
        let b: BinarySequence = parts.next().unwrap().parse().unwrap();
        assert!(BinaryPair::new(a, b).unwrap().is_periodic_golay());
    }
    assert!(stderr_of(&out).contains("verified 4"));
}

#[test]
fn verify_sds_accepts_recorded_corpus() {
    let out = charms(&["verify-sds", &data_path("sds68.txt")]);
    assert!(out.status.success());
    let stdout = stdout_of(&out);
    assert!(stdout.contains("29/29 valid"));
    assert!(!stdout.contains("INVALID"));
    assert!(stdout.lines().take(29).all(|l| l.contains("golay-condition yes")));
}

#[test]
fn verify_sds_flags_bad_record() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.sds");
    // Sizes satisfy the counting identity, but residue 1 occurs three
    // times as a difference instead of lambda = 2.
    std::fs::write(&path, "v=7 lambda=2\nX: 0 1 2\nY: 0 1 3\n").unwrap();
    let out = charms(&["verify-sds", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = stdout_of(&out);
    assert!(stdout.contains("INVALID"));
    assert!(stdout.contains("0/1 valid"));
}

#[test]
fn equiv_compares_pairs_and_reports_by_exit_code() {
    // A rotation of side A with side B fixed stays in the class.
    let out = charms(&[
        "equiv", "--a1", "+-++", "--b1", "++++", "--a2", "-+++", "--b2", "++++",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "equivalent");

    let inequivalent = [
        "equiv", "--a1", "++++", "--b1", "++-+", "--a2", "----", "--b2", "++-+",
    ];
    let out = charms(&inequivalent);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_of(&out).trim(), "not equivalent");

    // Negating side A is inside the extended group only.
    let mut with_negation = inequivalent.to_vec();
    with_negation.push("--negation");
    let out = charms(&with_negation);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "equivalent");
}

#[test]
fn equiv_deduplicates_a_file_of_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pairs.txt");
    std::fs::write(&path, "+-++ ++++\n-+++ ++++\n").unwrap();
    let out = charms(&["equiv", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().count(), 1);
    assert!(stderr_of(&out).contains("2 pair(s), 1 class(es)"));
}

#[test]
fn usage_errors_exit_2() {
    let out = charms(&["gen"]);
    assert_eq!(out.status.code(), Some(2));

    let out = charms(&["equiv", "--a1", "++++"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("--a1 --b1 --a2 --b2"));
}
