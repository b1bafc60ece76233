//! End-to-end tests of the binary: exit codes, JSON output shape, the
//! enumeration-cap override, and output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/fixtures");
    path.push(name);
    path.display().to_string()
}

fn dmh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dmh"))
        .args(args)
        .env_remove("DMH_ENUM_CAP")
        .output()
        .expect("binary runs")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn stdout_lines(output: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&output.stdout)
        .lines()
        .map(|line| serde_json::from_str(line).expect("stdout is line-delimited JSON"))
        .collect()
}

#[test]
fn check_lattice_accepts_the_diamond() {
    let out = dmh(&["check-lattice", &fixture("m2_fix.json")]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["valid"], true);
    assert_eq!(lines[0]["elements"], 4);
    assert_eq!(lines[0]["bottom"], "0");
}

#[test]
fn check_lattice_rejects_non_distributive_input() {
    let out = dmh(&["check-lattice", &fixture("m3.json")]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("error"));
}

#[test]
fn malformed_input_exits_2() {
    let out = dmh(&["check-lattice", &fixture("malformed.json")]);
    assert_eq!(exit_code(&out), 2);
    let out = dmh(&[
        "check",
        "serial",
        "--lattice",
        &fixture("malformed.json"),
        "--relation",
        &fixture("serial1_relation.json"),
    ]);
    assert_eq!(exit_code(&out), 2);
    let out = dmh(&["check-lattice", "/no/such/file.json"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn check_serial_holds_on_the_stored_relation() {
    let out = dmh(&[
        "check",
        "serial",
        "--lattice",
        &fixture("m2_fix.json"),
        "--relation",
        &fixture("serial1_relation.json"),
    ]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["property"], "serial");
    assert_eq!(lines[0]["holds"], true);
}

#[test]
fn check_symmetric_dm_fails_with_witness_on_the_chain() {
    let out = dmh(&[
        "check",
        "symmetric_dm",
        "--lattice",
        &fixture("chain3.json"),
        "--relation",
        &fixture("chain3_symm_relation.json"),
    ]);
    assert_eq!(exit_code(&out), 1);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["holds"], false);
    assert_eq!(lines[0]["witness"]["points"], serde_json::json!(["x", "y"]));
    assert_eq!(lines[0]["witness"]["lhs"], "u");
}

#[test]
fn check_unknown_property_exits_2() {
    let out = dmh(&[
        "check",
        "bogus",
        "--lattice",
        &fixture("m2_fix.json"),
        "--relation",
        &fixture("serial1_relation.json"),
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn check_crisp_alliance() {
    let out = dmh(&[
        "check",
        "positive_alliance",
        "--crisp",
        &fixture("alliance_figure.json"),
    ]);
    assert_eq!(exit_code(&out), 0);
    // Transitivity fails on the same relation with a three-point witness.
    let out = dmh(&[
        "check",
        "transitive",
        "--crisp",
        &fixture("alliance_figure.json"),
    ]);
    assert_eq!(exit_code(&out), 1);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["witness"]["points"].as_array().unwrap().len(), 3);
}

#[test]
fn law_check_reports_the_first_counterexample() {
    let out = dmh(&[
        "law",
        "--lhs",
        "L",
        "--rhs",
        "U",
        "--rel",
        "le",
        "--lattice",
        &fixture("m2_fix.json"),
        "--relation",
        &fixture("serial1_relation.json"),
    ]);
    assert_eq!(exit_code(&out), 1);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["holds_for_all"], false);
    assert!(lines[0]["counterexample"]["set"].is_object());

    let out = dmh(&[
        "law",
        "--lhs",
        "U",
        "--rhs",
        "U",
        "--rel",
        "eq",
        "--lattice",
        &fixture("m2_fix.json"),
        "--relation",
        &fixture("serial1_relation.json"),
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn correspondence_is_verified_even_when_the_property_fails() {
    // The stored relation is not transitive and the law fails with it: the
    // biconditional itself is confirmed.
    let out = dmh(&[
        "correspondence",
        "transitive",
        "--lattice",
        &fixture("m2_fix.json"),
        "--relation",
        &fixture("serial1_relation.json"),
    ]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["property_holds"], false);
    assert_eq!(lines[0]["law_u_holds"], false);
    assert_eq!(lines[0]["law_l_holds"], false);
    assert_eq!(lines[0]["verified"], true);
}

#[test]
fn sweep_m2_fix_two_points_is_clean() {
    let out = dmh(&["sweep", "--algebra", "m2_fix", "--n", "2"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 7);
    for line in &lines {
        assert_eq!(line["relations_checked"], 256);
        assert_eq!(line["disagreements"], 0);
    }
}

#[test]
fn sweep_cap_is_enforced() {
    // 4 points over the diamond: 4^16 relations blows the default cap.
    let out = dmh(&["sweep", "--algebra", "m2_fix", "--n", "4"]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("cap"));
}

#[test]
fn env_var_tightens_the_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_dmh"))
        .args(["sweep", "--algebra", "m2_fix", "--n", "2"])
        .env("DMH_ENUM_CAP", "10")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 2);

    let out = Command::new(env!("CARGO_BIN_EXE_dmh"))
        .args(["sweep", "--algebra", "m2_fix", "--n", "2"])
        .env("DMH_ENUM_CAP", "not_a_number")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn crisp_sweep_three_points() {
    let out = dmh(&["sweep", "--crisp", "--n", "2", "--kinds", "serial,euclidean"]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["kind"], "serial");
    assert_eq!(lines[0]["relations_checked"], 16);
    assert_eq!(lines[0]["disagreements"], 0);
}

#[test]
fn search_finds_the_seriality_gap_and_exits_1() {
    let out = dmh(&[
        "search",
        "--left",
        "serial_singleton",
        "--right",
        "L<=U",
        "--algebra",
        "m2_fix",
        "--n",
        "2",
    ]);
    assert_eq!(exit_code(&out), 1);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["found"], true);
    assert!(lines[0]["relation"]["matrix"].is_array());
}

#[test]
fn search_on_a_theorem_finds_nothing() {
    let out = dmh(&[
        "search",
        "--left",
        "transitive",
        "--right",
        "UU<=U",
        "--algebra",
        "chain3",
        "--n",
        "2",
    ]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["found"], false);
}

#[test]
fn reconstruct_accepts_the_operator_and_checks_axioms() {
    let out = dmh(&["reconstruct", "--operator", &fixture("operator_serial1.json")]);
    assert_eq!(exit_code(&out), 0);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["base_axiom"], true);
    assert_eq!(lines[0]["representable"], true);
    assert_eq!(
        lines[0]["relation"]["matrix"],
        serde_json::json!([["a", "b"], ["b", "a"]])
    );

    // The stored relation is not reflexive, so the identity lower bound
    // fails.
    let out = dmh(&[
        "reconstruct",
        "--operator",
        &fixture("operator_serial1.json"),
        "--axiom",
        &fixture("axiom_reflexive.json"),
    ]);
    assert_eq!(exit_code(&out), 1);
    let lines = stdout_lines(&out);
    assert_eq!(lines[0]["axiom_holds"], false);

    let out = dmh(&[
        "reconstruct",
        "--operator",
        &fixture("operator_serial1.json"),
        "--axiom",
        &fixture("axiom_combined.json"),
    ]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn every_stored_example_reproduces() {
    let list = dmh(&["reproduce", "list"]);
    assert_eq!(exit_code(&list), 0);
    let ids: Vec<String> = String::from_utf8_lossy(&list.stdout)
        .lines()
        .map(str::to_owned)
        .collect();
    assert_eq!(ids.len(), 7);
    for id in ids {
        let out = dmh(&["reproduce", &id]);
        assert_eq!(exit_code(&out), 0, "example {id} must reproduce");
        for line in stdout_lines(&out) {
            assert_eq!(line["pass"], true, "{id}: {line}");
        }
    }
}

#[test]
fn unknown_example_exits_2() {
    let out = dmh(&["reproduce", "nope"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn identical_inputs_give_identical_output() {
    let args = ["sweep", "--algebra", "chain3", "--n", "2"];
    let first = dmh(&args);
    let second = dmh(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(exit_code(&first), 0);
}

#[test]
fn pretty_flag_renders_text() {
    let out = dmh(&[
        "--pretty",
        "check",
        "serial",
        "--lattice",
        &fixture("m2_fix.json"),
        "--relation",
        &fixture("serial1_relation.json"),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("serial: holds"));
    assert!(!text.contains('{'));
}
