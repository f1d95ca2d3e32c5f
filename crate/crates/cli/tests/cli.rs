use std::io::Write;
use std::process::Command;

use serde_json::Value;
use strata_cli::{run, Outcome, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};
use strata_core::exact_ring::{parse_rational, rat};

fn strata(args: &[&str]) -> Outcome {
    run(std::iter::once("strata").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = strata(&full);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn first_line(out: &Outcome) -> &str {
    out.stdout.lines().next().unwrap_or("")
}

#[test]
fn stratum_divisor_text() {
    let out = strata(&["stratum-divisor", "--g", "3"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(first_line(&out), "12ψ - 24λ + 2δ0 + 3δ1");
    let out = strata(&["stratum-divisor", "--g", "3", "--interior"]);
    assert_eq!(first_line(&out), "12ψ - 24λ");
}

#[test]
fn pencil_pairing() {
    let out = strata(&["pair", "--g", "3", "--curve", "2,3,27,0"]);
    assert_eq!((out.code, first_line(&out)), (EXIT_OK, "6"));
    let out = strata(&["pair", "--fixture", "plane-quartic-pencil"]);
    assert_eq!(first_line(&out), "6");
    let out = strata(&["pair", "--fixture", "canonical-pencil", "--g", "5", "--interior"]);
    assert_eq!(first_line(&out), "24");
    // wrong number of boundary entries for g=3
    let out = strata(&["pair", "--g", "3", "--curve", "2,3,27"]);
    assert_eq!(out.code, EXIT_DOMAIN);
    let out = strata(&["pair", "--g", "3", "--curve", "2,3,27,0,1"]);
    assert_eq!(out.code, EXIT_DOMAIN);
}

#[test]
fn certify_w_genus_two() {
    let doc = json(&["certify", "--case", "W-g2"]);
    assert_eq!(doc["result"]["verdict"], "negative-extremal-certified");
    assert_eq!(doc["result"]["bn_ratio"], "-1/4");
    assert_eq!(doc["citations"].as_array().unwrap().len(), 1);
}

#[test]
fn certify_from_tuple() {
    let doc = json(&["certify", "--g", "4", "--a", "4", "--L", "1137/550", "--kind", "limit"]);
    assert_eq!(doc["result"]["epsilon"], "37/550");
    assert_eq!(doc["result"]["caveats"].as_array().unwrap().len(), 2);

    let doc = json(&["certify", "--g", "3", "--a", "3", "--L", "3/2", "--kind", "exact"]);
    assert_eq!(doc["result"]["verdict"], "not-negative");

    let out = strata(&["certify", "--g", "3", "--a", "3"]);
    assert_eq!(out.code, EXIT_USAGE);
    let out = strata(&["certify", "--g", "3", "--a", "2", "--L", "2", "--kind", "exact"]);
    assert_eq!(out.code, EXIT_DOMAIN);
    let out = strata(&["certify", "--case", "W-g4", "--epsilon", "1/2"]);
    assert_eq!(out.code, EXIT_DOMAIN);
    let out = strata(&["certify", "--case", "W-g9"]);
    assert_eq!(out.code, EXIT_DOMAIN);
}

#[test]
fn certify_with_perturbation() {
    let doc = json(&["certify", "--case", "W-g2", "--s", "1/10"]);
    // d = (2/3) / ((2 + 2/3)(1 + (1/10)(8 + 2 + 1/3)))
    let d = rat(2, 3) / (rat(8, 3) * (rat(1, 1) + rat(1, 10) * rat(31, 3)));
    assert_eq!(doc["result"]["bound_d"], d.to_string());
}

#[test]
fn bn_and_stratum_classes() {
    let out = strata(&["bn-class", "--g", "3", "--mu", "2,1", "--r", "1"]);
    assert_eq!(first_line(&out), "-λ1 + 3ω1 + ω2");
    let out = strata(&["stratum-class", "--g", "2", "--mu", "1^2"]);
    assert_eq!(first_line(&out), "-λ1 + ω1 + ω2");
    let doc = json(&["stratum-class", "--g", "3", "--mu", "2^2", "--reduce"]);
    let terms = doc["result"]["class"]["terms"].as_array().unwrap();
    assert_eq!(terms[0]["monomial"], "λ1^2");
    assert_eq!(terms[0]["coefficient"], "1/2");
    assert_eq!(doc["result"]["codimension"], 2);

    let out = strata(&["stratum-class", "--g", "3", "--mu", "2,1"]);
    assert_eq!(out.code, EXIT_DOMAIN);
    assert!(out.stderr.contains("not a partition of 4"));
    let out = strata(&["bn-class", "--g", "2", "--mu", "2,2", "--r", "1"]);
    assert_eq!(out.code, EXIT_DOMAIN);
}

#[test]
fn ratios_command() {
    let doc = json(&["ratios", "--g", "2", "--mu", "2", "--L", "4/3", "--divisor", "-1,3,0"]);
    assert_eq!(doc["result"]["delta0"], "40/3");
    assert_eq!(doc["result"]["divisor_ratio"], "-1/4");
    assert_eq!(doc["result"]["slope"], "10");

    let doc = json(&["ratios", "--g", "2", "--mu", "2", "--L", "4/3", "--divisor", "0,1", "--chi-half", "3"]);
    assert_eq!(doc["result"]["lambda"], "4");
    assert_eq!(doc["result"]["divisor_ratio"], "10");

    let out = strata(&["ratios", "--g", "2", "--mu", "2", "--L", "0"]);
    assert_eq!(out.code, EXIT_DOMAIN);
    let out = strata(&["ratios", "--g", "2", "--mu", "2", "--L", "x"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn parse_errors_exit_one() {
    for args in [
        &["kappa", "--mu", "3,0"][..],
        &["kappa", "--mu", ""][..],
        &["kappa"][..],
        &["frobnicate"][..],
        &["bn-class", "--g", "x", "--mu", "1", "--r", "1"][..],
    ] {
        assert_eq!(strata(args).code, EXIT_USAGE, "{args:?}");
    }
    assert_eq!(strata(&["--help"]).code, EXIT_OK);
}

#[test]
fn json_rationals_round_trip() {
    let doc = json(&["certify", "--case", "BN-g5-1^5"]);
    let ratio = parse_rational(doc["result"]["bn_ratio"].as_str().unwrap()).unwrap();
    assert_eq!(ratio, rat(-2191, 235761));
    let doc = json(&["kappa", "--mu", "2,1,1"]);
    assert_eq!(
        parse_rational(doc["result"]["kappa"].as_str().unwrap()).unwrap(),
        rat(17, 36)
    );
    let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["citations", "command", "inputs", "result"]);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["stratum-class", "--g", "4", "--mu", "2,1^4", "--json"][..],
        &["table", "--json"][..],
        &["verify"][..],
    ] {
        assert_eq!(strata(args), strata(args));
    }
}

#[test]
fn verify_builtin_passes() {
    let out = strata(&["verify"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.lines().filter(|l| l.starts_with("PASS")).count() >= 19);
    let doc = json(&["verify"]);
    assert_eq!(doc["result"]["passed"], true);
    assert!(doc["result"]["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn verify_names_a_corrupted_row() {
    let table = strata_core::teich::BUILTIN_TABLE.replace("4/3 ", "5/6 ");
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(table.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();

    let out = strata(&["verify", "--table-file", path]);
    assert_eq!(out.code, EXIT_DOMAIN);
    assert!(out.stdout.contains("FAIL  row W-g2"), "{}", out.stdout);
    assert!(out.stdout.contains("checks failed: row W-g2"));

    let doc: Value = serde_json::from_str(&strata(&["verify", "--json", "--table-file", path]).stdout).unwrap();
    let failed: Vec<&str> = doc["result"]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["row W-g2"]);

    let out = strata(&["certify", "--case", "W-g2", "--table-file", path]);
    assert!(out.stdout.contains("not-negative"));
}

#[test]
fn unreadable_or_malformed_tables() {
    let out = strata(&["table", "--table-file", "/nonexistent/table.tsv"]);
    assert_eq!(out.code, EXIT_USAGE);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(b"W-g2 2 2 2 4/3 sometimes W cite\n").unwrap();
    let out = strata(&["table", "--table-file", file.path().to_str().unwrap()]);
    assert_eq!(out.code, EXIT_DOMAIN);
    assert!(out.stderr.contains("line 1"));
}

#[test]
fn approx_marks_decimals() {
    let out = strata(&["kappa", "--mu", "2", "--approx"]);
    assert_eq!(first_line(&out), "κ(2) = 2/9 (≈ 0.222222, inexact)");
    // JSON never carries floats
    let doc = json(&["kappa", "--mu", "2", "--approx"]);
    assert_eq!(doc["result"]["kappa"], "2/9");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_strata");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["stratum-divisor", "--g", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).starts_with("12ψ - 24λ + 2δ0 + 3δ1"));
    assert_eq!(status(&["kappa", "--mu", "3,0"]).status.code(), Some(1));
    assert_eq!(status(&["stratum-divisor", "--g", "1"]).status.code(), Some(2));
}
