use std::process::Command;

use serde_json::{json, Value};

use fcmt::cli::{run, Outcome, EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFICATION_FAILED};

const BLOCK_M2: &str = "1 -1 0 0 1 -1; 0 1 -1 1 -1 0";

fn fcmt(args: &[&str]) -> Outcome {
    run(std::iter::once("fcmt").chain(args.iter().copied()))
}

fn report(args: &[&str]) -> Value {
    let out = fcmt(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn sorted(v: &Value) -> Vec<Value> {
    let mut out = v.as_array().unwrap().clone();
    out.sort_by_key(|x| x.to_string());
    out
}

#[test]
fn hilbert_examples() {
    let r = report(&["hilbert", "-e", BLOCK_M2]);
    let want = json!([[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1], [1, 0, 0, 0, 0, 1], [0, 1, 0, 0, 1, 0], [0, 0, 1, 1, 0, 0]]);
    assert_eq!(sorted(&r["result"]["atoms"]), sorted(&want));
    assert_eq!(r["checks"], json!({"atoms_in_monoid": true, "pairwise_incomparable": true}));

    let r = report(&["hilbert", "-e", "", "-t", "3"]);
    assert_eq!(r["result"]["atoms"], json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]]));

    let r = report(&["hilbert", "-e", "1 -1 -1 1"]);
    assert_eq!(r["result"]["num_atoms"], 4);
}

#[test]
fn ring_examples() {
    let r = report(&["ring", "D6", "--m", "2"]);
    assert_eq!(r["result"]["class_group"], "Z^2");
    assert_eq!(r["result"]["half_factorial"], false);
    assert_eq!(r["result"]["elasticity"], "3/2");

    let r = report(&["ring", "A5", "--m", "1"]);
    assert_eq!(r["result"]["presentation"], json!({"equations": [], "free_rank": 4}));
    assert_eq!(r["result"]["class_group"], "0");

    let r = report(&["ring", "E7", "--m", "0"]);
    assert_eq!(r["result"]["presentation"], json!({"equations": [], "free_rank": 15}));
    assert_eq!(r["result"]["factorial"], true);
}

#[test]
fn invariants_of_the_glued_d6_ring() {
    let r = report(&["elasticity", "--ring", "D6", "--m", "2"]);
    assert_eq!(r["result"]["elasticity"], "3/2");
    let r = report(&["lengths", "--ring", "D6", "--m", "2", "--element", "1 1 1 1 1 1 0 0 0 0 0 0 0"]);
    assert_eq!(r["result"]["length_set"], json!([2, 3]));
    assert_eq!(r["result"]["display"], "{2,3}");
    let r = report(&["classgroup", "-e", BLOCK_M2]);
    assert_eq!(r["result"]["invariants"], json!({"free_rank": 2, "torsion": []}));
    assert_eq!(r["result"]["zbasis"], true);
    assert_eq!(r["result"]["divisor_theory"], true);
}

#[test]
fn all_d2_factorizations_verify() {
    let r = report(&["verify-mf", "--family", "d2", "--n", "3", "--all"]);
    let pairs = r["result"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 10);
    assert!(pairs.iter().all(|p| p["verified"] == true));
}

#[test]
fn blocks_and_decompositions() {
    let r = report(&["blocks", "--classes", "1; -1"]);
    assert_eq!(r["result"]["atoms"], json!([[1, 1]]));
    assert_eq!(r["result"]["factorial"], true);

    let r = report(&["decompose-pair", "--module", "rank3"]);
    assert_eq!(r["result"]["num_summands"], 3);
    assert_eq!(r["result"]["endomorphism_dim"], 9);
    let r = report(&["decompose-pair", "--convention", "tau2", "--seed", "3"]);
    assert_eq!(r["result"]["num_summands"], 2);
    assert!(r["result"]["summands"].as_array().unwrap().iter().all(|s| s["k_dim"] == 2 && s["v_dim"] == 3));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let cases: &[&[&str]] = &[
        &["hilbert", "-e", BLOCK_M2],
        &["ring", "D6", "--m", "2"],
        &["--pretty", "ring", "E7"],
        &["decompose-pair", "--module", "rank3", "--seed", "5"],
        &["ar-solve", "--d6"],
        &["fitting", "--family", "a2", "--n", "2", "--j", "1"],
    ];
    for args in cases {
        let (a, b) = (fcmt(args), fcmt(args));
        assert_eq!(a, b, "{args:?}");
        assert!(!a.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn pretty_is_a_view_of_the_same_report() {
    let json = fcmt(&["hilbert", "-e", "1 -1 -1 1"]);
    let pretty = fcmt(&["--pretty", "hilbert", "-e", "1 -1 -1 1"]);
    assert_eq!(json.code, pretty.code);
    assert_ne!(json.stdout, pretty.stdout);
    let digest = serde_json::from_str::<Value>(&json.stdout).unwrap()["input_digest"].as_str().unwrap().to_string();
    assert!(pretty.stdout.contains(&digest));
    assert!(pretty.stdout.contains("num_atoms: 4"));
    assert_eq!(fcmt(&["--json", "--pretty", "hilbert", "-e", "1 -1"]).code, EXIT_INPUT_ERROR);
}

#[test]
fn timing_is_opt_in() {
    let plain = report(&["hilbert", "-e", "1 -1"]);
    assert!(plain.get("timing_ms").is_none());
    let timed = report(&["--timing", "hilbert", "-e", "1 -1"]);
    assert!(timed["timing_ms"].as_f64().is_some_and(|t| t >= 0.0));
    assert_eq!(timed["result"], plain["result"]);
}

#[test]
fn failed_verification_exits_with_one() {
    let out = fcmt(&["ar-solve", "--d6"]);
    assert_eq!(out.code, EXIT_VERIFICATION_FAILED);
    assert!(serde_json::from_str::<Value>(&out.stdout).is_ok());
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        &["frobnicate"][..],
        &["ring", "Q9"],
        &["ring", "D6", "--m", "3", "--case", "1"],
        &["hilbert", "-e", "1,x"],
        &["lengths", "--ring", "D6", "--m", "2", "--element", "1"],
        &["decompose-pair", "--convention", "bogus"],
        &["hilbert", "-f", "/nonexistent/presentation.json"],
        &["verify-mf", "--family", "e9"],
    ] {
        let out = fcmt(args);
        assert_eq!(out.code, EXIT_INPUT_ERROR, "{args:?}: {out:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(out.stderr.starts_with("error"), "{args:?}: {}", out.stderr);
    }
    let out = fcmt(&["hilbert", "-e", "1 2; 3 x"]);
    assert!(out.stderr.contains("line 1, column 8"), "{}", out.stderr);
}

#[test]
fn help_and_version_succeed() {
    let out = fcmt(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    for sub in ["hilbert", "classgroup", "divisor-theory", "blocks", "lengths", "elasticity", "ring", "ranks", "verify-mf", "fitting", "ar-solve", "decompose-pair"] {
        assert!(out.stdout.contains(sub), "{sub}");
    }
    assert_eq!(fcmt(&["--version"]).code, EXIT_OK);
}

#[test]
fn file_inputs() {
    let dir = std::env::temp_dir().join(format!("fcmt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("presentation.json");
    std::fs::write(&p, r#"{"equations": [[1, -1, 0, 0, 1, -1], [0, 1, -1, 1, -1, 0]], "free_rank": 1}"#).unwrap();
    let r = report(&["hilbert", "-f", p.to_str().unwrap()]);
    assert_eq!(r["result"]["num_atoms"], 6);

    let s = dir.join("system.json");
    std::fs::write(&s, r#"{"num_primes": 2, "sequences": [{"left": "L", "middle": [["M", 1]], "right": "N"}], "known": {"L": [1, 0], "N": [0, 2]}}"#).unwrap();
    let r = report(&["ar-solve", "-f", s.to_str().unwrap()]);
    assert_eq!(r["result"]["solution"]["ranks"]["M"], json!([1, 2]));

    std::fs::write(&s, "{\"num_primes\": 2,\n  \"sequences\": [}").unwrap();
    let out = fcmt(&["ar-solve", "-f", s.to_str().unwrap()]);
    assert_eq!(out.code, EXIT_INPUT_ERROR);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_matches_library_entry_point() {
    for args in [&["ring", "D6", "--m", "2"][..], &["ar-solve", "--d6"], &["ring", "Q9"]] {
        let expected = fcmt(args);
        let out = Command::new(env!("CARGO_BIN_EXE_fcmt")).args(args).output().unwrap();
        assert_eq!(out.status.code(), Some(expected.code), "{args:?}");
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected.stdout, "{args:?}");
        assert_eq!(String::from_utf8(out.stderr).unwrap(), expected.stderr, "{args:?}");
    }
}
