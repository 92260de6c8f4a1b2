use std::process::{Command, Output};

use diagcomm::hilbert::BidegreePolynomial;
use diagcomm_cli::report::bidegree_from_json;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagcomm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().expect("exit code"), v)
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no row {name}"))
}

#[test]
fn json_report_shape() {
    let (code, v) = json(&["degrees", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["tool"], "diagcomm");
    assert!(v["version"].is_string());
    assert_eq!(v["config"]["n"], 2);
    assert_eq!(v["config"]["command"], "degrees");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    for c in checks {
        for key in ["name", "status", "payload", "paperExpectation", "elapsedMs"] {
            assert!(c.get(key).is_some(), "missing {key} in {c}");
        }
        assert!(c["elapsedMs"].is_null());
    }
    let row = check(&v, "degrees/21");
    assert_eq!(row["status"], "PASS");
    assert_eq!(
        row["payload"]["bidegree"],
        serde_json::json!({"A^2 B^0": 1, "A^1 B^1": 1, "A^0 B^2": 1})
    );
    assert_eq!(
        bidegree_from_json(&row["payload"]["bidegree"]),
        Some(BidegreePolynomial::parse("A^2 + AB + B^2").unwrap())
    );
}

#[test]
fn timings_fill_elapsed() {
    let (_, v) = json(&["strata", "--n", "2", "--timings"]);
    assert!(v["checks"][0]["elapsedMs"].is_u64());
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["degrees", "--n", "9"]).status.code(), Some(2));
    assert_eq!(
        run(&["degrees", "--n", "3", "--pi", "21"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["degrees", "--pi", "113"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["tao", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn inverse_diag_convention_fails_with_exit_1() {
    let (code, v) = json(&[
        "smooth",
        "--n",
        "3",
        "--trials",
        "10",
        "--diag-convention",
        "inverse",
    ]);
    assert_eq!(code, 1);
    assert_eq!(check(&v, "smooth/diag-identity")["status"], "FAIL");
    assert_eq!(check(&v, "smooth/jacobian")["status"], "PASS");
}

#[test]
fn output_is_identical_across_thread_counts() {
    for cmd in ["smooth", "tao", "conjectures"] {
        let one = run(&[
            cmd,
            "--n",
            "3",
            "--seed",
            "7",
            "--threads",
            "1",
            "--format",
            "json",
        ]);
        let four = run(&[
            cmd,
            "--n",
            "3",
            "--seed",
            "7",
            "--threads",
            "4",
            "--format",
            "json",
        ]);
        assert!(one.status.success());
        assert_eq!(one.stdout, four.stdout, "{cmd}");
    }
}

#[test]
fn seeds_change_samples() {
    let a = run(&["smooth", "--n", "3", "--seed", "1", "--format", "json"]);
    let b = run(&["smooth", "--n", "3", "--seed", "2", "--format", "json"]);
    assert_ne!(a.stdout, b.stdout);
}

#[test]
fn cache_hits_and_rejects_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, first) = json(&["degrees", "--n", "3", "--pi", "231", "--cache-dir", d]);
    assert_eq!(code, 0);
    let files: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(files.len(), 1);
    let (_, second) = json(&["degrees", "--n", "3", "--pi", "231", "--cache-dir", d]);
    assert_eq!(first, second);

    // drop one basis element: the S-pair check must notice and recompute
    let text = std::fs::read_to_string(&files[0]).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    let truncated: Vec<&str> = lines
        .iter()
        .copied()
        .filter(|l| !l.is_empty())
        .take(lines.len() - 2)
        .collect();
    std::fs::write(&files[0], truncated.join("\n") + "\n").unwrap();
    let (code, third) = json(&["degrees", "--n", "3", "--pi", "231", "--cache-dir", d]);
    assert_eq!(code, 0);
    assert_eq!(first, third);
    assert_eq!(std::fs::read_to_string(&files[0]).unwrap(), text);
}

#[test]
fn csv_and_table_formats() {
    let out = run(&["tao", "--n", "2", "--format", "csv"]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        [
            "name",
            "status",
            "result",
            "payload",
            "paperExpectation",
            "elapsedMs"
        ]
    );
    let rows: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(&rows[0][0], "tao/rank-bound");
    assert_eq!(&rows[0][1], "PASS");
    let payload: Value = serde_json::from_str(&rows[0][3]).unwrap();
    assert_eq!(payload["trials"], 100);

    let table = String::from_utf8(run(&["tao", "--n", "2"]).stdout).unwrap();
    assert!(table
        .lines()
        .any(|l| l.starts_with("PASS") && l.contains("tao/rank-bound")));
    assert!(table.ends_with("passed 1, failed 0, reports 0, missing 0, findings 0\n"));
}

#[test]
fn tiny_budget_gives_missing_rows() {
    let (code, v) = json(&[
        "degrees",
        "--n",
        "3",
        "--pi",
        "321",
        "--budget-seconds",
        "0.000001",
    ]);
    assert_eq!(code, 0);
    assert_eq!(check(&v, "degrees/321")["status"], "MISSING");
    assert_eq!(v["summary"]["missing"], 1);
}

#[test]
fn flipped_orientation_is_reported() {
    let (code, v) = json(&["degenerate", "--n", "2", "--orientation", "flipped"]);
    assert_eq!(code, 0);
    let row = check(&v, "degenerate/limit");
    assert_eq!(row["status"], "REPORT");
    assert_eq!(row["payload"]["equalsW0ConjugateD0"], true);
}

#[test]
fn lex_order_gives_the_same_degrees() {
    let (_, grevlex) = json(&["degrees", "--n", "2"]);
    let (code, lex) = json(&["degrees", "--n", "2", "--order", "lex"]);
    assert_eq!(code, 0);
    assert_eq!(grevlex["checks"], lex["checks"]);
}

#[test]
fn all_runs_every_applicable_command() {
    let (code, v) = json(&["all", "--n", "2"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    for prefix in [
        "degrees/",
        "identities/",
        "degenerate/",
        "smooth/",
        "tao/",
        "strata/",
        "conjectures/",
    ] {
        assert!(names.iter().any(|n| n.starts_with(prefix)), "{prefix}");
    }
    assert_eq!(v["summary"]["failed"], 0);
    assert_eq!(v["summary"]["findings"], 0);
}
