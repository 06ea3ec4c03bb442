use std::path::PathBuf;
use std::process::Command as Process;

use lindef::report::{parse_job, run_job, run_property_suite, Command};
use lindef::Error;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

#[test]
fn quotient_ring_fixture() {
    let spec = parse_job(&read("tensor_drop.json")).unwrap();
    assert_eq!(spec.command, Command::Ld);
    assert_eq!(spec.ideal, vec!["x^2", "x*y"]);
    let r = run_job(&spec).unwrap();
    assert_eq!(r.result["status"], "ZeroUpTo");
}

#[test]
fn documented_jobs() {
    let r = run_job(&parse_job(&read("residue_betti.json")).unwrap()).unwrap();
    let betti = &r.result["betti"];
    assert_eq!(betti["terminated"], true);
    let entries: Vec<(i64, i64, i64)> = betti["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["n"].as_i64().unwrap(), e["j"].as_i64().unwrap(), e["beta"].as_i64().unwrap()))
        .collect();
    assert_eq!(entries, vec![(0, 0, 1), (1, 1, 2), (2, 2, 1)]);

    let r = run_job(&parse_job(&read("gorenstein_ild.json")).unwrap()).unwrap();
    assert_eq!((r.result["status"].as_str(), r.result["value"].as_i64()), (Some("Exact"), Some(2)));

    let k = r#"{"field":"QQ","vars":["x","y"],"ideal":["x^2","x*y"],"command":"ld","options":{"cutoff":5}}"#;
    let r = run_job(&parse_job(k).unwrap()).unwrap();
    assert_eq!((r.result["status"].as_str(), r.result["cutoff"].as_i64()), (Some("ZeroUpTo"), Some(5)));

    let r = run_job(&parse_job(&read("consistency.json")).unwrap()).unwrap();
    assert!(!r.has_failed_checks(), "{}", r.result);
}

#[test]
fn reports_are_deterministic() {
    for name in ["tensor_drop.json", "residue_betti.json", "gorenstein_ild.json", "consistency.json"] {
        let spec = parse_job(&read(name)).unwrap();
        let a = run_job(&spec).unwrap().deterministic_json();
        let b = run_job(&spec).unwrap().deterministic_json();
        assert_eq!(a, b, "{name}");
        assert!(!a.contains("elapsed_ms"));
    }
    let a = run_property_suite("ldvssup", 9, None).unwrap();
    let b = run_property_suite("ldvssup", 9, None).unwrap();
    assert_eq!((a.checks, a.passed, &a.counts), (b.checks, b.passed, &b.counts));
}

#[test]
fn errors_name_the_offending_input() {
    let bad = r#"{"field":"QQ","vars":["x","y"],"ideal":["x + 1"],"command":"betti"}"#;
    let e = parse_job(bad).unwrap_err();
    assert!(matches!(e, Error::NotHomogeneous(_)) || e.to_string().contains("x + 1"), "{e}");
    assert!(e.to_string().contains("x + 1"), "{e}");

    let e = parse_job(r#"{"field":"QQ","vars":["x"],"command":"nonsense"}"#).unwrap_err();
    assert!(e.to_string().contains("nonsense"), "{e}");

    let e = parse_job("{\n  \"field\": \"QQ\",\n  \"vars\": [\"x\"\n  \"command\": \"betti\"\n}").unwrap_err();
    assert!(matches!(e, Error::Parse { line: 4, .. }), "{e:?}");

    let e = parse_job(r#"{"field":"QQ","vars":["x"],"command":"betti","options":{"cutoff":0}}"#).unwrap_err();
    assert!(e.to_string().contains("cutoff"), "{e}");

    let e = parse_job(r#"{"field":"GF(4)","vars":["x"],"command":"betti"}"#).unwrap_err();
    assert!(e.to_string().contains('4'), "{e}");

    let poly = parse_job(r#"{"field":"GF(101)","vars":["x","y"],"ideal":[],"command":"koszul"}"#).unwrap();
    assert!(poly.ideal.is_empty());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_lindef");
    let out = Process::new(bin).arg(fixture("residue_betti.json")).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total: 1 2 1"), "{text}");

    let out = Process::new(bin)
        .args(["--format", "json", "--cutoff", "3"])
        .arg(fixture("tensor_drop.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["cutoff"], 3);

    let missing = Process::new(bin).arg(fixture("missing.json")).output().unwrap();
    assert_eq!(missing.status.code(), Some(1));

    let suite = Process::new(bin)
        .args(["--suite", "lintensor", "--seed", "3", "--instances", "4"])
        .output()
        .unwrap();
    assert_eq!(suite.status.code(), Some(0));
    let unknown = Process::new(bin).args(["--suite", "nope"]).output().unwrap();
    assert_eq!(unknown.status.code(), Some(1));
}
