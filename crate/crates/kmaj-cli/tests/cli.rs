//! End-to-end tests of the `kmaj` binary: worked examples, exit codes,
//! format round-trips and thread-count independence.

use std::process::{Command, Output};
use std::str::FromStr;

use kmaj::word::Word;
use kmaj::QPolynomial;

fn kmaj(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmaj"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn kmaj_with_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmaj"))
        .args(args)
        .env("KMAJ_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn stats_reproduces_the_running_example() {
    let out = kmaj(&["stats", "--word", "9 8 6 1 7 3 2 4 5", "--k", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("maj_k: 19"));
    assert!(text.contains("des_k: {(1,4), (2,5), (3,6), (5,8)}"));
    assert!(text.contains("ides: {2, 5, 7, 8}"));
}

#[test]
fn phi_reproduces_the_worked_table_endpoint() {
    let out = kmaj(&["phi", "--word", "6 9 3 8 1 7 2 4 5", "--k", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("image: 9 8 6 1 7 3 2 4 5"));
}

#[test]
fn json_output_round_trips() {
    let out = kmaj(&[
        "stats",
        "--word",
        "9 8 _ 6 1",
        "--k",
        "2",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let word = Word::from_str(value["word"].as_str().unwrap()).expect("word re-parses");
    assert_eq!(word, Word::from_str("9 8 _ 6 1").unwrap());
    // re-serializing the parsed value reproduces the same value
    let reparsed: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
    assert_eq!(reparsed, value);

    let out = kmaj(&["dist", "--multiset", "1:1,2:1,3:1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let poly: QPolynomial =
        serde_json::from_value(serde_json::json!({ "coeffs": value["coeffs"] })).unwrap();
    assert_eq!(poly.coeffs(), &[1, 2, 2, 1]);

    let out = kmaj(&["rsk", "--word", "9 8 6 1 7 3 2 4 5", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let q: kmaj::StandardTableau = serde_json::from_value(value["q"].clone()).expect("q re-parses");
    assert_eq!(q.shape().parts(), &[4, 2, 1, 1, 1]);
}

#[test]
fn every_json_payload_reparses_stably() {
    let commands: &[&[&str]] = &[
        &["stats", "--word", "9 8 _ 6 1", "--k", "2"],
        &["phi", "--word", "3 1 2", "--k", "2"],
        &["psi", "--word", "3 1 2", "--k", "2"],
        &[
            "phirange", "--word", "3 1 2", "--to-k", "3", "--from-k", "1",
        ],
        &["foata", "--word", "3 1 2"],
        &["tstats", "--tableau", "1 3 4 7 / 2 5 6 / 8", "--k", "2"],
        &["Phi", "--tableau", "1 3 5 7 / 2 4 6 / 8", "--k", "2"],
        &["rsk", "--word", "3 1 2"],
        &[
            "dist",
            "--multiset",
            "1:2,2:1",
            "--spacers",
            "2",
            "--k",
            "2",
        ],
        &["dist", "--shape", "3,2", "--k", "3"],
        &["classes", "--n", "3", "--k", "2"],
        &["verify", "k4-breakdown"],
    ];
    for args in commands {
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--format", "json"]);
        let out = kmaj(&full);
        let text = stdout(&out);
        let json_part = match *args.first().unwrap() {
            // verify prints a summary line before the report
            "verify" => text.splitn(2, '\n').nth(1).unwrap().to_string(),
            _ => text,
        };
        let value: serde_json::Value =
            serde_json::from_str(&json_part).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        let reparsed: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
        assert_eq!(reparsed, value, "unstable payload for {args:?}");
    }
}

#[test]
fn csv_output_is_tabular() {
    let out = kmaj(&["dist", "--shape", "2,2", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("power,coefficient"));
    assert_eq!(text.lines().count(), 6); // header + powers 0..=4
    for line in lines {
        assert_eq!(line.split(',').count(), 2);
    }
}

#[test]
fn verify_pass_and_failure_exit_codes() {
    let out = kmaj(&["verify", "schur-shape", "--max-size", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("suite schur-shape: PASS"));

    // interior spacer masks genuinely separate the k-distributions, so the
    // full Mahonian sweep reports a failure and exits 1
    let out = kmaj(&["verify", "mahonian", "--max-size", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.starts_with("suite mahonian: FAIL"));
    assert!(text.contains("counterexample") || text.contains("failures"));
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(kmaj(&["stats", "--word", "zap"]).status.code(), Some(2));
    assert_eq!(kmaj(&["nonsense"]).status.code(), Some(2));
    assert_eq!(kmaj(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(
        kmaj(&["tstats", "--tableau", "3 2 / 1", "--k", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kmaj(&["tstats", "--tableau", "1 2 / 3 4", "--k", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kmaj(&["dist", "--multiset", "1:1", "--shape", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(kmaj(&["foata", "--word", "1 _ 2"]).status.code(), Some(2));
    assert_eq!(
        kmaj(&["phirange", "--word", "1 2", "--to-k", "2", "--from-k", "2"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn experimental_flag_gates_the_naive_level_4_extension() {
    let out = kmaj(&[
        "Phi",
        "--tableau",
        "1 2 / 3 5 / 4 6",
        "--k",
        "4",
        "--experimental",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("image: 1 3 / 2 5 / 4 6"));
    let gated = kmaj(&["Phi", "--tableau", "1 2 / 3 5 / 4 6", "--k", "4"]);
    assert_eq!(gated.status.code(), Some(2));
}

#[test]
fn tableau_phi_matches_the_worked_chain() {
    let out = kmaj(&["Phi", "--tableau", "1 3 5 7 / 2 4 6 / 8", "--k", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("image: 1 3 4 7 / 2 5 6 / 8"));
}

#[test]
fn suites_are_independent_of_the_thread_count() {
    for suite_args in [
        ["verify", "phi2-commute", "--max-size", "5"],
        ["verify", "mahonian", "--max-size", "4"],
    ] {
        let single = kmaj_with_threads(&suite_args, "1");
        let multi = kmaj_with_threads(&suite_args, "4");
        assert_eq!(single.status.code(), multi.status.code());
        assert_eq!(stdout(&single), stdout(&multi), "suite {suite_args:?}");
    }
}
