//! End-to-end checks of the command-line interface: output text, exit codes,
//! and agreement with the library calls behind each subcommand.

use std::process::{Command, Output};

use braidcode::codec::{CodeScheme, SymbolString};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidcode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn encode_matches_worked_example() {
    let out = run(&["encode", "--alphabet", "2", "010"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "B3: 2 2 2 1 1 -2 2 2\n");
}

#[test]
fn encode_empty_string_prints_identity() {
    let out = run(&["encode", "--alphabet", "3", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "B4:\n");
}

#[test]
fn decode_recovers_the_string() {
    let out = run(&[
        "decode",
        "--alphabet",
        "2",
        "--max-len",
        "4",
        "B3: 2 2 2 1 1 -2 2 2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "010\n");
}

#[test]
fn decode_prints_none_for_foreign_words() {
    let out = run(&["decode", "--alphabet", "2", "--max-len", "3", "B3: 1 1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NONE\n");
}

#[test]
fn trivial_yes_and_no() {
    let yes = run(&["trivial", "B3: 1 -1"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout(&yes), "YES\n");

    let no = run(&["trivial", "B3: 1 1"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no), "NO\n");
}

#[test]
fn equiv_braid_relation() {
    let out = run(&["equiv", "B3: 1 2 1", "B3: 2 1 2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "YES\n");

    let out = run(&["equiv", "B3: 1 2", "B3: 2 1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NO\n");
}

#[test]
fn verify_agrees_with_library() {
    for symbols in ["", "010", "2101", "0000"] {
        let out = run(&["verify", "--alphabet", "3", symbols]);
        let scheme = CodeScheme::new(3).unwrap();
        let parsed = braidcode::cli::parse_symbols(symbols, Some(3)).unwrap();
        let expected = scheme.verify_roundtrip(&parsed).unwrap();
        assert_eq!(out.status.code(), Some(if expected { 0 } else { 1 }));
        assert_eq!(stdout(&out), if expected { "YES\n" } else { "NO\n" });
    }
}

#[test]
fn distance_prints_integer_and_infers_alphabet() {
    let out = run(&["distance", "--alphabet", "2", "000", "100"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");

    let out = run(&["distance", "A2:10", "A2:110"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn axioms_report_passes() {
    let out = run(&["axioms", "--alphabet", "2", "--max-len", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("strings checked: 15"));
    assert!(text.contains("violations: 0"));
    assert!(text.ends_with("PASS\n"));
}

#[test]
fn distribution_two_column_output() {
    let out = run(&["distribution", "--alphabet", "2", "--length", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 1\n2 2\n3 4\n");

    let explicit = run(&[
        "distribution",
        "--alphabet",
        "2",
        "--length",
        "3",
        "--reference",
        "101",
    ]);
    assert_eq!(stdout(&explicit), "1 1\n2 2\n3 4\n");
}

#[test]
fn efficiency_csv_minimum_at_twenty() {
    let out = run(&["efficiency", "--exponent", "0.3333333", "--max", "100"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("N,cost,gain,ratio"));
    let mut best: Option<(usize, f64)> = None;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 4, "bad row {line:?}");
        let n: usize = fields[0].parse().unwrap();
        let ratio: f64 = fields[3].parse().unwrap();
        if best.map(|(_, r)| ratio < r).unwrap_or(true) {
            best = Some((n, ratio));
        }
    }
    assert_eq!(best.unwrap().0, 20);
    assert_eq!(text.lines().count(), 100); // header + 99 rows
}

#[test]
fn burau_check_single_word() {
    let out = run(&["burau-check", "B3: 1 2 1 -2 -1 -2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("burau: TRIVIAL"));
    assert!(text.contains("decider: TRIVIAL"));
    assert!(text.ends_with("PASS\n"));
}

#[test]
fn burau_check_sweep() {
    let out = run(&["burau-check", "--strands", "3", "--max-len", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("words checked: 85")); // 1 + 4 + 16 + 64
    assert!(text.contains("disagreements: 0"));
    assert!(text.ends_with("PASS\n"));
}

#[test]
fn injectivity_report() {
    let out = run(&["injectivity", "--alphabet", "2", "--max-len", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("strings checked: 14"));
    assert!(text.contains("pairs checked: 91"));
    assert!(text.contains("collisions: 0"));
    assert!(text.ends_with("PASS\n"));
}

#[test]
fn parse_errors_exit_two() {
    let out = run(&["trivial", "B3: 0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("column 5"));

    let out = run(&["encode", "--alphabet", "2", "012"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_errors_exit_three() {
    let out = run(&["injectivity", "--alphabet", "10", "--max-len", "30"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("budget"));
}

#[test]
fn distance_without_alphabet_context_is_usage_error() {
    let out = run(&["distance", "010", "000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn outputs_are_deterministic() {
    let first = run(&["axioms", "--alphabet", "3", "--max-len", "2"]);
    let second = run(&["axioms", "--alphabet", "3", "--max-len", "2"]);
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn wide_alphabet_symbols_round_trip() {
    let scheme = CodeScheme::new(12).unwrap();
    let s = SymbolString::new(12, vec![0, 11, 3]).unwrap();
    let encoded = scheme.encode(&s).unwrap();

    let out = run(&["encode", "--alphabet", "12", "0,11,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), format!("{encoded}\n"));
}
