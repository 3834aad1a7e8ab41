//! End-to-end checks of the command-line surface, including exit codes
//! (0 ok, 1 verification failure, 2 usage/parse, 3 guard) and output
//! determinism.

use std::process::{Command, Output};

fn gpl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

#[test]
fn compute_fixtures() {
    let out = gpl(&["compute", "--poly", "domination", "--graph", "A_"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "X^2 + 2*X");

    let out = gpl(&[
        "compute",
        "--poly",
        "chromatic",
        "--edges",
        "n=3;0-1,1-2,0-2",
    ]);
    assert_eq!(stdout(&out), "X^3 - 3*X^2 + 2*X");

    let out = gpl(&["compute", "--poly", "potts", "--graph", "A?"]);
    assert_eq!(stdout(&out), "X^2");
}

#[test]
fn compute_json_and_basis() {
    let out = gpl(&["compute", "--poly", "chromatic", "--graph", "A_", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["vars"][0], "X");

    // chi(K_2) = X^2 - X = X_(2): a single falling-factorial coefficient
    let out = gpl(&[
        "compute",
        "--poly",
        "chromatic",
        "--graph",
        "A_",
        "--basis",
        "falling",
    ]);
    assert_eq!(stdout(&out), "X^2");
}

#[test]
fn catalog_counts() {
    let out = gpl(&["catalog", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 11);

    let out = gpl(&["catalog", "--n", "0"]);
    assert_eq!(stdout(&out), "?");

    let out = gpl(&["catalog", "--n", "3", "--connected"]);
    assert_eq!(stdout(&out).lines().count(), 2);

    let out = gpl(&["catalog", "--n", "3", "--format", "jsonl"]);
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["g6"].is_string());
    }
}

#[test]
fn soleval_fixture_file() {
    let fixture = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../fixtures/independence.sol"
    );
    let out = gpl(&["soleval", "--file", fixture, "--graph", "Bo"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "X^2 + 3*X + 1");
}

#[test]
fn transform_commands() {
    let out = gpl(&[
        "transform",
        "--stable",
        "--poly",
        "domination",
        "--graph",
        "A_",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["roundtrip"], "ok");
    assert_eq!(v["a0"], "6");
    assert_eq!(v["factors"][0], "X");

    let out = gpl(&[
        "transform",
        "--dense",
        "--poly",
        "chromatic",
        "--graph",
        "A_",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["division_check"], "ok");

    // negative chromatic coefficients reject the Hurwitz rewrite
    let out = gpl(&[
        "transform",
        "--hurwitz",
        "--poly",
        "chromatic",
        "--graph",
        "A_",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = gpl(&[
        "transform",
        "--sokal",
        "--poly",
        "spanning-tree",
        "--edges",
        "0-1,1-2,0-2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["roundtrip"], "ok");
    assert_eq!(v["slots"], 8);
}

#[test]
fn compare_command() {
    let out = gpl(&[
        "compare",
        "--left",
        "chromatic",
        "--right",
        "char-adjacency",
        "--catalog",
        "n<=4",
        "--mode",
        "dp",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["relation"].is_string());
    assert_eq!(v["catalog"], "n<=4");
}

#[test]
fn exit_codes() {
    // parse errors exit 2
    let out = gpl(&["compute", "--poly", "nonsense", "--graph", "A_"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gpl(&["compute", "--poly", "chromatic", "--graph", "@@@"]);
    assert_eq!(out.status.code(), Some(2));
    // guard violations exit 3
    let out = gpl(&[
        "compute",
        "--poly",
        "tutte",
        "--edges",
        "0-1,0-2,0-3,0-4,0-5,0-6,1-2,1-3,1-4,1-5,1-6,2-3,2-4,2-5,2-6,3-4,3-5,3-6,4-5,4-6,5-6",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn guard_override_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_gpl"))
        .env("GPL_GUARD_OVERRIDE", "potts_max_edges=2")
        .args(["compute", "--poly", "potts", "--edges", "0-1,1-2,0-2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("potts_max_edges"), "{err}");
}

#[test]
fn verify_suite_runs() {
    let out = gpl(&["verify", "--suite", "dom-counterexamples"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 failures"));

    let out = gpl(&["verify", "--suite", "char-not-gen", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0]["failed"], 0);

    let out = gpl(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "compute",
        "--poly",
        "tutte",
        "--edges",
        "n=4;0-1,1-2,2-3,0-3,0-2",
    ];
    let a = gpl(&args);
    let b = gpl(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["verify", "--suite", "dom-counterexamples"];
    let a = gpl(&args);
    let b = gpl(&args);
    assert_eq!(a.stdout, b.stdout);
}
