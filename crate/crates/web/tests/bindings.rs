use ogt_web::{construct_json, domination_json, tau_json, WEB_MAX_K};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn construct_reports_encodings() {
    let v = parse(&construct_json("TT(3)").unwrap());
    assert_eq!(v["n"], 3);
    assert_eq!(v["hex"], "3:e0");
    assert_eq!(v["arcs"].as_array().unwrap().len(), 3);
    assert_eq!(v["longest_path"], 3);
    let v = parse(&construct_json("C(3)").unwrap());
    assert!(v["longest_path"].is_null());
    assert!(construct_json("nope").is_err());
}

#[test]
fn domination_of_the_triangle_is_an_odd_cycle() {
    let v = parse(&domination_json("C(3)").unwrap());
    assert_eq!(v["shape"], "odd_cycle");
    assert_eq!(v["undominated"].as_array().unwrap().len(), 3);
    assert!(domination_json("P(3)").is_err());
}

#[test]
fn tau_sweeps_small_levels() {
    let v = parse(&tau_json("PP(4,2)", 6).unwrap());
    assert_eq!(v["tau"], 5);
    assert_eq!(v["exact"], true);
    let w = ogt_core::format::from_hex(v["witnesses"]["4"].as_str().unwrap()).unwrap();
    let h = ogt_core::construct::power_path(4, 2).unwrap();
    assert!(ogt_core::hom::hom_exists(&h, &w).is_none());
    assert!(tau_json("P(3)", WEB_MAX_K + 1).is_err());
}
