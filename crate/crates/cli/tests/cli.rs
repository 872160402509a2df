use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_towergaps"))
        .args(args)
        .env_remove("TOWERGAPS_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn genus_examples() {
    assert_eq!(stdout(&["genus", "--q", "2", "--level", "3", "--format", "plain"]), "5\n");
    assert_eq!(stdout(&["genus", "--q", "3", "--level", "3", "--format", "plain"]), "22\n");
    assert_eq!(stdout(&["genus", "--q", "2", "--level", "1", "--format", "plain"]), "0\n");
    assert_eq!(json(&["genus", "--q", "2"])["genus"], 5);
}

#[test]
fn divisor_examples() {
    let d = json(&["divisor", "--q", "2", "--xwv", "1,0,0"]);
    assert_eq!(d["Q"], 1);
    assert_eq!(d["S0"], serde_json::json!([1]));
    assert_eq!(d["S1"], serde_json::json!([2]));
    assert_eq!(d["P"], -4);
    let z = json(&["divisor", "--q", "2", "--xwv", "0,0,0"]);
    assert_eq!(z["Q"], 0);
    assert_eq!(z["P"], 0);
    let m = json(&["divisor", "--q", "2", "--multi", "0:(1):(0)"]);
    assert_eq!(m["S1"], serde_json::json!([6]));
    assert_eq!(m["P"], -6);
    assert_eq!(
        stdout(&["divisor", "--q", "2", "--x123", "1,0,0", "--format", "csv"]),
        "Q,1\nS0_1,1\nS1_1,2\nP,-4\n"
    );
}

#[test]
fn dim_and_basis_examples() {
    assert_eq!(json(&["dim", "--q", "2", "--u", "20"])["dim"], 16);
    assert_eq!(json(&["dim", "--q", "3"])["dim"], 1);
    // only constants lie in L(S0_1 + 2 S0_2), and they do not vanish at Q
    assert_eq!(stdout(&["dim", "--q", "3", "--s", "1,2", "--format", "plain"]), "1\n");
    assert_eq!(stdout(&["dim", "--q", "3", "--s", "1,2", "--t", "0", "--r", "-1", "--format", "plain"]), "0\n");
    let csv = stdout(&["basis", "--q", "2", "--u", "20", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 16);
    let b = json(&["basis", "--q", "3", "--s", "1,2", "--u", "9"]);
    assert_eq!(b["variant"], "MULTI");
    let b = json(&["basis", "--q", "3", "--u", "9", "--variant", "x1x2x3"]);
    assert_eq!(b["variant"], "X1X2X3");
}

#[test]
fn gaps_examples() {
    let g = json(&["gaps", "--q", "5", "--places", "Q1"]);
    assert_eq!(g["count"], 116);
    assert_eq!(g["places"], serde_json::json!(["Q1"]));
    assert_eq!(json(&["gaps", "--q", "3", "--places", "Q1,Q2"])["count"], 167);
    assert_eq!(json(&["gaps", "--q", "3", "--places", "Q1,P1"])["count"], 182);
    let plain = stdout(&["gaps", "--q", "2", "--format", "plain"]);
    assert_eq!(plain, "1\n2\n3\n5\n7\n");
}

#[test]
fn check_examples() {
    let c = json(&["check", "--q", "3", "--places", "Q1,P1", "--tuple", "15,16"]);
    assert_eq!(c["pure_gap"], true);
    assert_eq!(c["oracle_agreement"], true);
    let c = json(&["check", "--q", "3", "--places", "Q1,P1", "--tuple", "0,0"]);
    assert_eq!(c["in_semigroup"], true);
    let c = json(&["check", "--q", "5", "--places", "Q1", "--tuple", "214"]);
    assert_eq!(c["pure_gap"], true);
    assert_eq!(c["in_semigroup"], false);
}

#[test]
fn verify_examples() {
    let tiny = run(&["verify", "--q", "2", "--box", "tiny"]);
    assert_eq!(tiny.status.code(), Some(0));
    let reports: Value = serde_json::from_slice(&tiny.stdout).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 12);
    assert!(reports[0].get("wall_time_ms").is_none());

    let golden: Value = json(&["verify", "--q", "3", "--suite", "golden"]);
    assert_eq!(golden[0]["mismatch_count"], 0);

    let timed = json(&["verify", "--q", "2", "--suite", "sums", "--timings"]);
    assert!(timed[0]["wall_time_ms"].is_u64());
}

#[test]
fn output_is_byte_identical() {
    for args in [
        &["gaps", "--q", "3", "--places", "Q1,P1"][..],
        &["verify", "--q", "3", "--suite", "triple", "--box", "tiny"][..],
        &["basis", "--q", "3", "--r", "4", "--u", "30", "--format", "csv"][..],
    ] {
        let a = run(args);
        let b = Command::new(env!("CARGO_BIN_EXE_towergaps"))
            .args(args)
            .env("TOWERGAPS_THREADS", "2")
            .output()
            .unwrap();
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.contains(&b'\r'));
    }
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("towergaps-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.txt");
    let out = run(&["genus", "--q", "4", "--format", "plain", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "57\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["genus"][..],
        &["genus", "--q", "6"][..],
        &["gaps", "--q", "3", "--places", "P1,Q1"][..],
        &["gaps", "--q", "3", "--places", "Q7"][..],
        &["check", "--q", "3", "--places", "Q1", "--tuple", "1,2"][..],
        &["divisor", "--q", "2"][..],
        &["divisor", "--q", "2", "--multi", "0:1:0"][..],
        &["dim", "--q", "2", "--r", "-2"][..],
        &["verify", "--q", "7", "--suite", "golden"][..],
        &["verify", "--q", "2", "--suite", "nope"][..],
        &["frobnicate"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let bad_env = Command::new(env!("CARGO_BIN_EXE_towergaps"))
        .args(["genus", "--q", "2"])
        .env("TOWERGAPS_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}
