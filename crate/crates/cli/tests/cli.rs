//! End-to-end checks of the ptm binary: output formats, flags and exit
//! codes (0 success, 1 counterexample, 2 usage/config, 3 budget).

use std::io::Write;
use std::process::{Command, Output};

fn ptm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptm"))
        .args(args)
        .env_remove("PTM_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim_end().to_string()
}

#[test]
fn compute_constant_term() {
    let out = ptm(&[
        "compute", "F", "--preset", "n", "--k", "2", "--m", "2", "--n", "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4");
}

#[test]
fn compute_normalized_family() {
    let out = ptm(&[
        "compute", "H", "--preset", "n", "--k", "2", "--m", "1", "--n", "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3/2");
}

#[test]
fn compute_full_polynomial() {
    let out = ptm(&[
        "compute", "f", "--preset", "s2", "--k", "2", "--m", "3", "--n", "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "6*x + 6");
}

#[test]
fn compute_annotates_cyclotomic_scalars() {
    let out = ptm(&[
        "compute", "F", "--preset", "n", "--k", "3", "--m", "2", "--n", "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(18 + 18*z) mod Phi_3");
    // rational values carry no annotation
    // non-primitive root: signs alternate, 0 - 1 + 4 - 9 = -6, no annotation
    let out = ptm(&[
        "compute", "F", "--preset", "n", "--k", "4", "--d", "2", "--m", "2", "--n", "1",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-6");
}

#[test]
fn compute_symbolic_flag() {
    let out = ptm(&[
        "compute",
        "F",
        "--preset",
        "n",
        "--k",
        "2",
        "--m",
        "2",
        "--n",
        "2",
        "--symbolic",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4*v1^2");
}

#[test]
fn compute_json_and_table() {
    let out = ptm(&[
        "compute", "F", "--preset", "n", "--k", "2", "--m", "2", "--n", "2", "--json",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), r#"{"m":2,"n":2,"poly":"4"}"#);

    let out = ptm(&[
        "compute", "F", "--preset", "n", "--k", "2", "--m", "2", "--n", "1", "--table", "--json",
    ]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 6);
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["poly"].is_string());
    }
}

#[test]
fn compute_from_spec_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        r#"{{"k":2, "dim":2, "P":[["1","0"],["0","2"]], "q":["1","1"]}}"#
    )
    .unwrap();
    let path = file.path().to_str().unwrap();
    let out = ptm(&["compute", "F", "--spec", path, "--m", "2", "--n", "2"]);
    assert!(out.status.success());
    // symmetric-algebra value for the two-dimensional sequence (s_2(n), n)
    assert_eq!(stdout(&out), "2*v1^2 + 6*v1*v2 + 4*v2^2");
}

#[test]
fn compute_rejects_bad_config() {
    let out = ptm(&["compute", "F", "--preset", "nope", "--m", "1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ptm(&["compute", "g", "--preset", "n", "--m", "1", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // d must divide k and exceed 1
    let out = ptm(&[
        "compute", "F", "--preset", "n", "--k", "4", "--d", "3", "--m", "1", "--n", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn partition_examples() {
    let out = ptm(&["partition", "--k", "2", "--v", "1", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        r#"{"P":[0,3,5,6],"Q":[1,2,4,7],"verified_up_to_m":2}"#
    );
    let out = ptm(&["partition", "--k", "4", "--n", "3", "--v", "1,3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verified_up_to_m"], 2);
    assert_eq!(
        v["P"].as_array().unwrap().len() + v["Q"].as_array().unwrap().len(),
        64
    );
}

#[test]
fn partition_rejects_odd_base() {
    let out = ptm(&["partition", "--k", "3", "--v", "1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exit_code() {
    let out = ptm(&[
        "partition",
        "--k",
        "2",
        "--v",
        "1",
        "--n",
        "12",
        "--budget",
        "16",
    ]);
    assert_eq!(out.status.code(), Some(3));
    // env-var fallback
    let out = Command::new(env!("CARGO_BIN_EXE_ptm"))
        .args(["partition", "--k", "2", "--v", "1", "--n", "12"])
        .env("PTM_BUDGET", "16")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_named_suites() {
    let out = ptm(&["verify", "cor2", "--n", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "cor2: verified (7 cases)");

    let out = ptm(&["verify", "cor2", "--n", "6", "--r", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "cor2: verified (1 cases)");

    let out = ptm(&["verify", "product-identity", "--k", "3", "--n", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("verified"));

    let out = ptm(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_text_output_is_deterministic() {
    let a = ptm(&[
        "verify",
        "vanishing",
        "--seed",
        "3",
        "--specs",
        "4",
        "--max-n",
        "3",
    ]);
    let b = ptm(&[
        "verify",
        "vanishing",
        "--seed",
        "3",
        "--specs",
        "4",
        "--max-n",
        "3",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_json_is_machine_readable() {
    let out = ptm(&["verify", "nieto", "--max-n", "4", "--json"]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let arr = reports.as_array().unwrap();
    assert_eq!(arr.len(), 1);
    assert_eq!(arr[0]["suite"], "nieto");
    assert_eq!(arr[0]["status"], "verified");
    assert_eq!(arr[0]["cases_checked"], 4);
    assert_eq!(arr[0]["elapsed_ms"], 0);
    assert_eq!(arr[0]["first_failure"], serde_json::Value::Null);
}

#[test]
fn conjecture_sweep_exit_codes() {
    // all points verified within this bound
    let out = ptm(&["conjecture", "3", "--max-total", "4"]);
    assert!(out.status.success());
    // larger bound reaches the degenerate n < m-1 points, reported honestly
    let out = ptm(&["conjecture", "3", "--max-total", "8", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let arr = reports.as_array().unwrap();
    let bad: Vec<&serde_json::Value> = arr
        .iter()
        .filter(|r| r["status"] == "counterexample")
        .collect();
    assert!(!bad.is_empty());
    for r in bad {
        assert!(r["witness"].is_string());
        let m: u32 = r["params"]["m"].as_str().unwrap().parse().unwrap();
        let n: u32 = r["params"]["n"].as_str().unwrap().parse().unwrap();
        assert!(n < m - 1, "only degenerate points may fail");
    }

    let out = ptm(&[
        "conjecture",
        "1",
        "--max-total",
        "3",
        "--max-components",
        "2",
    ]);
    assert!(out.status.success());

    let out = ptm(&["conjecture", "4", "--max-total", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn conjecture_skipped_budget_status() {
    let out = ptm(&[
        "conjecture",
        "1",
        "--max-total",
        "6",
        "--max-components",
        "1",
        "--budget",
        "4",
        "--json",
    ]);
    assert!(out.status.success(), "skips are not failures");
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(reports
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["status"] == "skipped-budget"));
}
