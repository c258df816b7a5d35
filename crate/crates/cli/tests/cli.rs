use std::process::{Command, Output};

fn ogt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ogt"))
        .args(args)
        .env("OGT_CACHE_DIR", "")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn tau_of_squared_path() {
    let o = ogt(&["tau", "PP(5,2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("7"));
}

#[test]
fn missing_homomorphism_exits_1() {
    let o = ogt(&["hom", "P(4)", "TT(3)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("no homomorphism"));
}

#[test]
fn homomorphism_map_is_printed() {
    let o = ogt(&["--json", "hom", "P(3)", "C(3)"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["found"], true);
    assert_eq!(v["map"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_emits_json_report() {
    let o = ogt(&["--json", "verify", "check_claim_6v"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["check_id"], "check_claim_6v");
    assert_eq!(v["passed"], true);
}

#[test]
fn unknown_construction_is_a_usage_error() {
    let o = ogt(&["construct", "nope(3)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn caps_exit_3() {
    assert_eq!(ogt(&["enumerate", "11"]).status.code(), Some(3));
    assert_eq!(ogt(&["tau", "P(3)", "--max-k", "11"]).status.code(), Some(3));
}

#[test]
fn construct_round_trips_through_digraph6() {
    let o = ogt(&["construct", "C(3)"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    let d6 = lines.next().unwrap().to_string();
    assert_eq!(lines.next(), Some("3:a0"));
    let again = ogt(&["construct", &d6]);
    assert_eq!(stdout(&again), out);
}

#[test]
fn graph_arguments_may_be_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "# a tournament\n\n3:e0\n").unwrap();
    let o = ogt(&["construct", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("3:e0"));
}

#[test]
fn enumerate_with_predicate() {
    let o = ogt(&["--json", "enumerate", "5", "--pred", "strongly_connected"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn exact_turan_number() {
    let o = ogt(&["--json", "ex", "3", "--forbid", "P(3)"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"], 2);
}
