//! End-to-end tests of the ontoeval binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ontoeval"))
        .args(args)
        .env_remove("ONTOEVAL_PROFILE")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn evaluate_empty_ontology_reports_oc() {
    let output = run(&["evaluate", fixture("empty.ttl").to_str().unwrap(), "--phase", "2.1"]);
    assert!(output.status.success(), "{output:?}");
    assert!(stdout(&output).starts_with("OC "), "{}", stdout(&output));
}

#[test]
fn evaluate_json_matches_the_golden_report() {
    let output = run(&[
        "evaluate",
        fixture("small.ttl").to_str().unwrap(),
        "--phase",
        "2.3",
        "--format",
        "json",
    ]);
    assert!(output.status.success());
    let golden = std::fs::read_to_string(fixture("golden_small_2.3.json")).unwrap();
    assert_eq!(stdout(&output), golden);
}

#[test]
fn gate_at_0913_advances_from_2_5() {
    let output = run(&[
        "gate",
        fixture("gate_0913.ttl").to_str().unwrap(),
        "--profile",
        fixture("gate_profile.json").to_str().unwrap(),
        "--phase",
        "2.5",
        "--threshold",
        "0.8",
    ]);
    assert!(output.status.success(), "{output:?}");
    let text = stdout(&output);
    assert!(text.contains("91.3%"), "{text}");
    assert!(text.contains("advance to 2.6"), "{text}");
}

#[test]
fn gate_at_0765_does_not_advance() {
    let output = run(&[
        "gate",
        fixture("gate_0765.ttl").to_str().unwrap(),
        "--profile",
        fixture("gate_profile.json").to_str().unwrap(),
        "--phase",
        "2.5",
    ]);
    assert_eq!(output.status.code(), Some(3), "{output:?}");
    let text = stdout(&output);
    assert!(text.contains("76.5%"), "{text}");
    assert!(text.contains("stay in 2.5"), "{text}");
}

#[test]
fn replay_emits_one_row_per_snapshot() {
    let output = run(&["replay", fixture("replay").to_str().unwrap()]);
    assert!(output.status.success(), "{output:?}");
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "iteration,phase,oc,classes,properties,axioms,individuals,gate_fired"
    );
    assert_eq!(lines.count(), 12);
}

#[test]
fn place_suggests_the_first_phase_for_an_empty_ontology() {
    let output = run(&["place", fixture("empty.ttl").to_str().unwrap()]);
    assert!(output.status.success());
    assert_eq!(stdout(&output).trim(), "2.1");
}

#[test]
fn recommend_lists_sorted_gains() {
    let output = run(&["recommend", fixture("small.ttl").to_str().unwrap(), "--phase", "2.3"]);
    assert!(output.status.success());
    let text = stdout(&output);
    let gains: Vec<f64> = text
        .lines()
        .filter(|l| l.starts_with('+'))
        .map(|l| l[1..l.find('%').unwrap()].parse().unwrap())
        .collect();
    assert!(!gains.is_empty());
    assert!(gains.windows(2).all(|w| w[0] >= w[1]), "{gains:?}");
}

#[test]
fn parse_errors_exit_1_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.ttl");
    std::fs::write(
        &path,
        "@prefix ex: <http://example.org/> .\nex:A rdfs:subClassOf ex:B .\n",
    )
    .unwrap();
    let output = run(&["evaluate", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1), "{output:?}");
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("broken.ttl:2:"), "{err}");
}

#[test]
fn bad_profile_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"phases": {"2.1": {"oc/bogus": 1}}}"#).unwrap();
    let output = run(&[
        "evaluate",
        fixture("empty.ttl").to_str().unwrap(),
        "--profile",
        path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(1), "{output:?}");
}

#[test]
fn usage_errors_exit_2() {
    let unknown_flag = run(&["evaluate", "--frobnicate"]);
    assert_eq!(unknown_flag.status.code(), Some(2));
    let bad_threshold = run(&[
        "evaluate",
        fixture("empty.ttl").to_str().unwrap(),
        "--threshold",
        "1.5",
    ]);
    assert_eq!(bad_threshold.status.code(), Some(2), "{bad_threshold:?}");
}

#[test]
fn profile_env_var_is_honored() {
    let output = Command::new(env!("CARGO_BIN_EXE_ontoeval"))
        .args([
            "gate",
            fixture("gate_0913.ttl").to_str().unwrap(),
            "--phase",
            "2.5",
        ])
        .env("ONTOEVAL_PROFILE", fixture("gate_profile.json"))
        .output()
        .unwrap();
    assert!(output.status.success(), "{output:?}");
    assert!(stdout(&output).contains("advance to 2.6"));
}

#[test]
fn sample_profiles_from_the_docs_parse() {
    let docs = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/profiles");
    for entry in std::fs::read_dir(docs).unwrap() {
        let path = entry.unwrap().path();
        let output = run(&[
            "evaluate",
            fixture("small.ttl").to_str().unwrap(),
            "--profile",
            path.to_str().unwrap(),
            "--phase",
            "2.3",
        ]);
        assert!(output.status.success(), "{path:?}: {output:?}");
    }
}
