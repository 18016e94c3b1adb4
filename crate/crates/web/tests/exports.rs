use serde_json::Value;

use ptsep_web::{mcvp_endtoend, pt_check, separability};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

const AB_PLUS: &str = "states: 0 1 2\nalphabet: a b\ninitial: 0\nfinal: 2\ntrans: 0 a 1\ntrans: 1 b 2\ntrans: 2 a 1\n";
const BA_PLUS: &str = "states: 0 1 2\nalphabet: a b\ninitial: 0\nfinal: 2\ntrans: 0 b 1\ntrans: 1 a 2\ntrans: 2 b 1\n";

#[test]
fn pt_check_reports_witness() {
    let even = "kind: dfa\nstates: e o\nalphabet: a\ninitial: e\nfinal: e\ntrans: e a o\ntrans: o a e\n";
    let r = parse(pt_check(even));
    assert_eq!(r["is_pt"], false);
    assert_eq!(r["witness"]["type"], "nontrivial_cycle");
    let r = parse(pt_check("states: p\nalphabet: a\n"));
    assert!(r["error"].as_str().unwrap().contains("initial"));
}

#[test]
fn separability_returns_tower() {
    let r = parse(separability(AB_PLUS, BA_PLUS, 3));
    assert_eq!(r["separable"], false);
    assert_eq!(r["witness"]["tower"], serde_json::json!(["ab", "baba", "ababab"]));
    let r = parse(separability(AB_PLUS, AB_PLUS, 0));
    assert_eq!(r["witness"]["tower"].as_array().unwrap().len(), 1);
}

#[test]
fn mcvp_sample_is_separable() {
    let r = parse(mcvp_endtoend("1 = 0\n2 = 1\n3 = AND 1 2\n4 = OR 3 3\n"));
    assert_eq!(r["eval"], 0);
    assert_eq!(r["separable"], true);
    assert_eq!(r["agree"], true);
    let r = parse(mcvp_endtoend("1 = 1\n"));
    assert_eq!(r["separable"], false);
    assert!(r["tower"].is_object());
}
