use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn pha(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pha")).args(args).output().expect("pha runs")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn full_reports_match_golden_files() {
    for name in ["ex-dg", "ex-sw", "ex-null"] {
        let input = fixture(&format!("{name}.json"));
        let out = pha(&["full", "--format", "json", input.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let golden = std::fs::read_to_string(fixture(&format!("{name}.full.json"))).unwrap();
        assert_eq!(stdout(&out), golden, "{name}");
    }
    let out = pha(&["full", fixture("ex-dg.json").to_str().unwrap()]);
    assert_eq!(stdout(&out), std::fs::read_to_string(fixture("ex-dg.full.txt")).unwrap());
}

#[test]
fn ex_dg_summary_flags() {
    let out = pha(&["full", "--format", "json", fixture("ex-dg.json").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let s = &v["summary"];
    assert_eq!(s["global"], false);
    for k in ["symmetric", "central", "trace_surjective", "strict", "galois"] {
        assert_eq!(s[k], true, "{k}");
    }
}

#[test]
fn catalog_documents_match_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    for (name, extra) in [("ex-dg", vec![]), ("ex-sw", vec!["--alpha", "1"]), ("ex-null", vec![])] {
        let path = dir.path().join(format!("{name}.json"));
        let mut args = vec!["example", name];
        args.extend(extra);
        args.extend(["-o", path.to_str().unwrap()]);
        assert_eq!(pha(&args).status.code(), Some(0));
        assert_eq!(std::fs::read_to_string(&path).unwrap(), std::fs::read_to_string(fixture(&format!("{name}.json"))).unwrap());
    }
}

#[test]
fn sweedler_round_trip_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sw.json");
    let p = path.to_str().unwrap();
    assert_eq!(pha(&["example", "ex-sw", "--alpha", "1", "-o", p]).status.code(), Some(0));
    assert_eq!(pha(&["full", p]).status.code(), Some(0));
    let path = dir.path().join("sw-gf7.json");
    let p = path.to_str().unwrap();
    assert_eq!(pha(&["example", "ex-sw", "--alpha", "3", "--field", "GF(7)", "-o", p]).status.code(), Some(0));
    assert_eq!(pha(&["full", p]).status.code(), Some(0));
}

#[test]
fn corrupted_axiom_iii_exits_one_with_witness() {
    let out = pha(&["verify", fixture("corrupt-iii.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("[FAIL] action: (iii)"), "{text}");
    assert!(text.contains("at [1, 1, 0]"), "{text}");
    let out = pha(&["verify", "--format", "json", fixture("corrupt-iii.json").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&serde_json::Value> = v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["witness"]["indices"], serde_json::json!([1, 1, 0]));
}

#[test]
fn input_errors_exit_two() {
    let out = pha(&["verify", fixture("bad-scalar.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("algebra.mult[0][0][0]"));
    let out = pha(&["verify", "/nonexistent/file.json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pha(&["example", "ex-dg", "--n", "4", "--m", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pha(&["example", "ex-dg", "--field", "GF(2)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn every_subcommand_runs_on_ex_dg() {
    let f = fixture("ex-dg.json");
    for sub in ["verify", "invariants", "trace", "envelope", "smash", "morita", "galois"] {
        let out = pha(&[sub, f.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{sub}: {}", stdout(&out));
    }
}

#[test]
fn example_without_out_prints_document() {
    let out = pha(&["example", "sweedler"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["hopf"]["names"], serde_json::json!(["1", "g", "x", "xg"]));
}
