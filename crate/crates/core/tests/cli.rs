//! End-to-end tests of the `chevkit` binary and the JSON report.

use std::process::{Command, Output};

use chevkit::verification::{run_report, CheckReport, Status};
use serde_json::Value;

fn chevkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chevkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8")
}

#[test]
fn info_reports_the_root_system() {
    let o = chevkit(&["info"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("E7: 126 roots, 63 positive"));
    assert!(text.contains("fundamental group: Z/2"));
    for row in ["D6A1  69", "E6T1  79", "A7    63"] {
        assert!(text.contains(row), "missing {row:?} in\n{text}");
    }
}

#[test]
fn theorem_prints_the_outer_part() {
    for (q, expected) in [(3, "C.3"), (5, "C.3"), (7, "C.Sym3"), (9, "C.Sym3"), (25, "C.Sym3")] {
        let o = chevkit(&["theorem", "--q", &q.to_string()]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().next(), Some(expected), "q = {q}");
    }
    let o = chevkit(&["--format", "json", "theorem", "--q", "23"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["outer_part"], "Sym3");
    assert_eq!(v["epsilon"], -1);
}

#[test]
fn usage_errors_exit_with_2() {
    let o = chevkit(&["theorem", "--q", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("error: q must be odd"));

    let o = chevkit(&["theorem", "--q", "15"]);
    assert_eq!(o.status.code(), Some(2));

    let o = chevkit(&["verify", "--prime", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--prime must be an odd prime"));

    let o = chevkit(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));

    let o = chevkit(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn h1_lists_the_five_classes() {
    let o = chevkit(&["h1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("[(1)]") && lines[0].ends_with("(2^2 x Inndiag(D4(q))).Sym3"));
    assert!(lines[3].starts_with("[(1,2,3)]") && lines[3].ends_with("3D4(q).3"));
}

#[test]
fn census_totals_127() {
    let o = chevkit(&["census", "--prime", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("total 127"));
    assert!(text.contains("69         D6A1  63"));
}

#[test]
fn verify_writes_the_json_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = chevkit(&["verify", "--prime", "7", "--q", "3", "--q", "7", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("checks passed"));

    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["engine"]["p"], 7);
    assert_eq!(v["engine"]["k"], 2);
    let checks = v["checks"].as_array().unwrap();
    for c in checks {
        for key in ["name", "status", "paper_anchor", "details"] {
            assert!(c.get(key).is_some(), "check without {key}: {c}");
        }
        assert_eq!(c["status"], "pass", "{}", c["name"]);
    }
    assert_eq!(v["summary"]["total"], checks.len());
    assert_eq!(v["summary"]["passed"], checks.len());
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let a = run_report(5, &[3, 5, 9]).unwrap();
    let b = run_report(5, &[3, 5, 9]).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    let parsed: CheckReport = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(parsed, a);
    assert!(a.checks.iter().all(|c| c.status == Status::Pass));
}
