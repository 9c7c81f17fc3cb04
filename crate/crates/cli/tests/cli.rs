use std::io::Write;
use std::process::{Command, Output, Stdio};

use nedlib::propcheck::{FuzzConfig, PropertyReport};
use nedlib::DistanceResult;
use serde::{Deserialize, Serialize};

fn nedlib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nedlib"))
        .args(args)
        .env_remove("NEDLIB_MAX_CED_LEN")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[derive(Serialize, Deserialize)]
struct DistRecord {
    a: String,
    b: String,
    #[serde(flatten)]
    result: DistanceResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alignment: Option<[String; 2]>,
}

#[derive(Serialize, Deserialize)]
struct CheckOutput {
    config: FuzzConfig,
    passed: bool,
    reports: Vec<PropertyReport>,
}

#[test]
fn dist_human() {
    let o = nedlib(&["dist", "ned", "acbb", "cc"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3/4 (0.75)\n");
    assert_eq!(stdout(&nedlib(&["dist", "ned", "x", "x"])), "0/1 (0)\n");
    assert_eq!(stdout(&nedlib(&["dist", "ned", "", "a"])), "1/1 (1)\n");
}

#[test]
fn dist_json_round_trips() {
    for args in [
        &["dist", "ged", "aa", "bb", "--json"][..],
        &["dist", "ned", "aabcde", "abpcg", "--witness", "--json"],
        &["dist", "ced", "ab", "ba", "--witness", "--json"],
    ] {
        let o = nedlib(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let text = stdout(&o);
        let parsed: DistRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", text);
    }
    let o = nedlib(&["dist", "ged", "aa", "bb", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], serde_json::json!({"num": 2, "den": 3}));
}

#[test]
fn path_is_dist_with_witness() {
    let text = stdout(&nedlib(&["path", "ned", "acbb", "cc"]));
    assert_eq!(text, stdout(&nedlib(&["dist", "ned", "acbb", "cc", "--witness"])));
    assert!(text.contains("bare: xnxc"), "{text}");
    assert!(text.contains("acbb\n_c_c\n"), "{text}");
}

#[test]
fn ced_witness_is_a_chain() {
    let text = stdout(&nedlib(&["path", "ced", "ab", "ba"]));
    assert!(text.starts_with("2/3 "), "{text}");
    assert!(text.contains("chain: \"ab\" -> "), "{text}");
}

#[test]
fn csv_and_batch() {
    let o = nedlib(&["dist", "ned", "acbb", "cc", "--format", "csv"]);
    assert_eq!(stdout(&o), "metric,a,b,num,den,decimal\nned,acbb,cc,3,4,0.75\n");

    let mut child = Command::new(env!("CARGO_BIN_EXE_nedlib"))
        .args(["dist", "ged", "--file", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"aa\tbb\naab\tb\n\ta\n")
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(
        stdout(&o),
        "metric,a,b,num,den,decimal\nged,aa,bb,2,3,0.666667\nged,aab,b,2,3,0.666667\nged,,a,1,1,1\n"
    );
}

#[test]
fn align_renders_padding() {
    let o = nedlib(&["align", "abcd", "badee", "--path", "xncnvv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("abcd__\n_badee\n"), "{text}");
    let o = nedlib(&["align", "abcd", "badee", "--path", "xncnvv", "--pad", "-"]);
    assert!(stdout(&o).starts_with("abcd--\n-badee\n"));
    let o = nedlib(&["align", "abcd", "bad", "--path", "xncnvv"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn compose_worked_example() {
    let o = nedlib(&[
        "compose", "cvnvnn", "vncnxnn", "--s1", "abab", "--s2", "bcbbab", "--s3", "ababab",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("(vcvnbnn)"), "{text}");
    assert!(text.contains("(vcvnnn)"), "{text}");
    assert!(text.contains("p13:        wgt 5 len 8"), "{text}");
    for check in ["apply_correct: true", "weight_bound:  true", "length_bound:  true"] {
        assert!(text.contains(check), "{text}");
    }
}

#[test]
fn compose_subscripted_and_json() {
    let o = nedlib(&["compose", "n(a).n(b)", "n(a).n(b)", "--s1", "ab", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["raw"], "n(a).n(b)");
    assert_eq!(v["wgt_p13"], 0);
    assert_eq!(v["checks"]["apply_correct"], true);
}

#[test]
fn compose_undefined_exits_3() {
    let o = nedlib(&["compose", "n(a)", "x(b)", "--s1", "a"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("p12[1], p23[1]"), "{}", stderr(&o));
    // bcbbbab is not the word p12 produces from abab
    let o = nedlib(&[
        "compose", "cvnvnn", "vncnxnn", "--s1", "abab", "--s2", "bcbbbab", "--s3", "ababab",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(nedlib(&["dist", "lev", "a", "b"]).status.code(), Some(64));
    assert_eq!(nedlib(&["dist", "ned", "a_b", "c"]).status.code(), Some(64));
    assert_eq!(nedlib(&["dist", "ned", "a"]).status.code(), Some(64));
    assert_eq!(nedlib(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(nedlib(&["check", "--property", "nope"]).status.code(), Some(64));
    assert_eq!(nedlib(&["check", "--trials", "0"]).status.code(), Some(64));
    assert_eq!(nedlib(&["--help"]).status.code(), Some(0));
}

#[test]
fn limits_exit_2() {
    let o = Command::new(env!("CARGO_BIN_EXE_nedlib"))
        .args(["dist", "ced", "aaaa", "a"])
        .env("NEDLIB_MAX_CED_LEN", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(nedlib(&["dist", "ced", &"a".repeat(40), "a"]).status.code(), Some(2));
}

#[test]
fn check_single_properties() {
    let o = nedlib(&["check", "--property", "fraction-lemmas"]);
    assert_eq!(o.status.code(), Some(0));
    let o = nedlib(&["check", "--property", "ced-escalation"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/4, 15/56, 181/660"));
}

#[test]
fn check_failure_exits_1() {
    // single-symbol words never break the triangle for the post-normalized distance
    let o = nedlib(&["check", "--property", "postnorm-violation", "--trials", "5", "--max-len", "1"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("FAIL postnorm-violation"));
}

#[test]
fn check_json_round_trips_and_is_seeded() {
    let args = ["check", "--property", "ned-metric,compose-chain", "--trials", "500", "--json"];
    let o = nedlib(&args);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let parsed: CheckOutput = serde_json::from_str(&text).unwrap();
    assert!(parsed.passed);
    assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", text);

    let strip = |o: CheckOutput| -> Vec<PropertyReport> {
        o.reports.into_iter().map(PropertyReport::without_timing).collect()
    };
    let again: CheckOutput = serde_json::from_str(&stdout(&nedlib(&args))).unwrap();
    assert_eq!(strip(parsed), strip(again));
}
