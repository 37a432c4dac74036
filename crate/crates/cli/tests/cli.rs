//! End-to-end tests driving the compiled binary: grammar, payloads, exit
//! codes, the size-cap override, and output determinism across worker counts.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_semiring")
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("semiring-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

fn run_in(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(bin());
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn construct(spec: &str, dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(name);
    let out = run(&["construct", spec, "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "construct {spec}: {}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn construct_writes_a_decodable_structure() {
    let dir = tmp_dir("construct");
    let path = construct("hu", &dir, "hu.json");
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["order"], 3);
    assert_eq!(v["labels"][1], "u");

    // Canonical re-encoding round-trips through `encode`.
    let encoded = run(&["encode", path.to_str().unwrap()]);
    assert_eq!(code(&encoded), 0);
    let reencoded: serde_json::Value = stdout_json(&encoded);
    assert_eq!(reencoded["add"], v["add"]);
}

#[test]
fn construct_rejects_bad_specs_with_exit_two() {
    let out = run(&["construct", "chain:1"]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty(), "diagnostic goes to stderr");
    assert!(out.stdout.is_empty(), "stdout stays machine-readable only");

    let out = run(&["construct", "nosuchfamily:3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    let dir = tmp_dir("check");
    let hu = construct("hu", &dir, "hu.json");

    let failing = run(&["check", "classical", hu.to_str().unwrap()]);
    assert_eq!(code(&failing), 1, "a failing property exits 1");
    let verdict = stdout_json(&failing);
    assert_eq!(verdict["holds"], false);
    assert_eq!(verdict["evidence"]["element"], 1, "witness element is in the payload");

    let holding = run(&["check", "pi_regular", hu.to_str().unwrap()]);
    assert_eq!(code(&holding), 0);
    assert_eq!(stdout_json(&holding)["holds"], true);

    let unknown = run(&["check", "sparkly", hu.to_str().unwrap()]);
    assert_eq!(code(&unknown), 2);
}

#[test]
fn classify_reports_units_and_flags() {
    let dir = tmp_dir("classify");
    let z6 = construct("zn:6", &dir, "z6.json");
    let out = run(&["classify", z6.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["classification"]["units"], serde_json::json!([1, 5]));
    assert_eq!(v["flags"]["is_ring"], true);
    assert_eq!(v["properties"].as_array().unwrap().len(), 10);
}

#[test]
fn ideal_lattice_slices_and_ideal_semiring() {
    let dir = tmp_dir("ideals");
    let z6 = construct("zn:6", &dir, "z6.json");
    let primes = run(&["ideals", z6.to_str().unwrap(), "--primes"]);
    assert_eq!(code(&primes), 0);
    let v = stdout_json(&primes);
    assert_eq!(v.as_array().unwrap().len(), 2, "Z_6 has two prime ideals");

    let full = run(&["ideals", z6.to_str().unwrap()]);
    let v = stdout_json(&full);
    assert_eq!(v["lattice"]["ideals"].as_array().unwrap().len(), 4);
    assert_eq!(v["order_properties"]["krull_dimension"], 0);

    let z4 = construct("zn:4", &dir, "z4.json");
    let idr_path = dir.join("id4.json");
    let idr = run(&["idsemiring", z4.to_str().unwrap(), "-o", idr_path.to_str().unwrap()]);
    assert_eq!(code(&idr), 0);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&idr_path).unwrap()).unwrap();
    assert_eq!(v["order"], 3, "Z_4 has three ideals");

    // Conflicting slice flags are a usage error.
    let both = run(&["ideals", z6.to_str().unwrap(), "--primes", "--nil"]);
    assert_eq!(code(&both), 2);
}

#[test]
fn localization_at_cancellatives_and_at_a_prime() {
    let dir = tmp_dir("localize");
    let z6 = construct("zn:6", &dir, "z6.json");

    let mc = run(&["localize", z6.to_str().unwrap(), "--at", "mc"]);
    assert_eq!(code(&mc), 0);
    let v = stdout_json(&mc);
    assert_eq!(v["localized"]["quotient"]["order"], 6, "Z_6 equals its total quotient");

    // Find the index of the even prime {0,2,4} in the lattice listing.
    let lattice = stdout_json(&run(&["ideals", z6.to_str().unwrap()]));
    let ideals = lattice["lattice"]["ideals"].as_array().unwrap();
    let even = ideals
        .iter()
        .position(|i| i == &serde_json::json!([0, 2, 4]))
        .expect("even prime present");
    let arg = format!("prime:{even}");
    let at_even = run(&["localize", z6.to_str().unwrap(), "--at", &arg]);
    assert_eq!(code(&at_even), 0);
    let v = stdout_json(&at_even);
    assert_eq!(v["localized"]["quotient"]["order"], 2, "localizing kills the 3-part");
    assert_eq!(v["is_local"], true);

    // The improper ideal (the whole carrier) is not prime.
    let full_idx = ideals.iter().position(|i| i.as_array().unwrap().len() == 6).unwrap();
    let bad = run(&["localize", z6.to_str().unwrap(), "--at", &format!("prime:{full_idx}")]);
    assert_eq!(code(&bad), 2);

    let malformed = run(&["localize", z6.to_str().unwrap(), "--at", "somewhere"]);
    assert_eq!(code(&malformed), 2);
}

#[test]
fn census_enumeration_stats_reps_and_caps() {
    let dir = tmp_dir("census");
    let two = run(&["census", "--order", "2", "--up-to-iso"]);
    assert_eq!(code(&two), 0);
    assert_eq!(stdout_json(&two).as_array().unwrap().len(), 2);

    let stats_path = dir.join("stats3.json");
    let reps_dir = dir.join("reps");
    let stats = run(&[
        "census",
        "--order",
        "3",
        "--stats",
        stats_path.to_str().unwrap(),
        "--reps",
        reps_dir.to_str().unwrap(),
    ]);
    assert_eq!(code(&stats), 0);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&stats_path).unwrap()).unwrap();
    assert_eq!(v["total_tables"], 6);
    assert_eq!(v["iso_classes"], 6);
    assert_eq!(std::fs::read_dir(&reps_dir).unwrap().count(), 6);

    let filtered = run(&["census", "--order", "3", "--up-to-iso", "--filter", "classical"]);
    assert_eq!(code(&filtered), 0);
    let n_classical = stdout_json(&filtered).as_array().unwrap().len();
    assert_eq!(v["per_property"]["classical"], n_classical);

    let too_big = run(&["census", "--order", "5"]);
    assert_eq!(code(&too_big), 2, "order 5 requires --long-run");

    let conflict =
        run(&["census", "--order", "3", "--filter", "classical", "--stats", "x.json"]);
    assert_eq!(code(&conflict), 2);
}

#[test]
fn verify_single_claim_and_report_file() {
    let dir = tmp_dir("verify");
    let report_path = dir.join("r.json");
    let out = run(&[
        "verify",
        "--claims",
        "C3",
        "--max-order",
        "3",
        "--report",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(v["summary"]["verified"], 1);
    assert_eq!(v["claims"][0]["id"], "C3");
    assert_eq!(v["claims"][0]["status"], "verified");
    assert_eq!(stdout_json(&out), v, "stdout and report file carry the same payload");

    let unknown = run(&["verify", "--claims", "C99"]);
    assert_eq!(code(&unknown), 2);

    let bad_suite = run(&["verify", "--suite", "nightly"]);
    assert_eq!(code(&bad_suite), 2);
}

#[test]
fn size_cap_env_is_enforced() {
    let dir = tmp_dir("cap");
    let out = run_in(&["construct", "zn:64"], &[("SEMIRING_SIZE_CAP", "10")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("size cap"));

    let ok = run_in(&["construct", "zn:8"], &[("SEMIRING_SIZE_CAP", "10")]);
    assert_eq!(code(&ok), 0);

    let z6 = construct("zn:6", &dir, "z6.json");
    let load_capped = run_in(&["classify", z6.to_str().unwrap()], &[("SEMIRING_SIZE_CAP", "4")]);
    assert_eq!(code(&load_capped), 2);

    let bad_value = run_in(&["construct", "hu"], &[("SEMIRING_SIZE_CAP", "lots")]);
    assert_eq!(code(&bad_value), 2);
}

#[test]
fn output_is_identical_across_worker_counts() {
    let one = run(&["--jobs", "1", "census", "--order", "3", "--up-to-iso"]);
    let four = run(&["--jobs", "4", "census", "--order", "3", "--up-to-iso"]);
    assert_eq!(code(&one), 0);
    assert_eq!(code(&four), 0);
    assert_eq!(one.stdout, four.stdout);

    let v1 = run(&["--jobs", "1", "verify", "--claims", "C5,C10", "--max-order", "3"]);
    let v4 = run(&["--jobs", "4", "verify", "--claims", "C5,C10", "--max-order", "3"]);
    assert_eq!(v1.stdout, v4.stdout);

    let zero = run(&["--jobs", "0", "census", "--order", "2"]);
    assert_eq!(code(&zero), 2);
}

#[test]
fn usage_errors_exit_two() {
    let nocmd = run(&[]);
    assert_eq!(code(&nocmd), 2);

    let unknown_flag = run(&["census", "--order", "2", "--frobnicate"]);
    assert_eq!(code(&unknown_flag), 2);

    let missing_file = run(&["classify", "/nonexistent/file.json"]);
    assert_eq!(code(&missing_file), 2);

    let dir = tmp_dir("garbage");
    let garbage = dir.join("garbage.json");
    std::fs::write(&garbage, "{\"not\": \"a table\"}").unwrap();
    let bad_decode = run(&["classify", garbage.to_str().unwrap()]);
    assert_eq!(code(&bad_decode), 2);
}
