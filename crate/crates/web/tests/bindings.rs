//! The exported functions on the native target.

use serde_json::Value;
use spk_web::{grading, orbit, real_forms};

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn orbit_report() {
    let v = parse(&orbit(" E7:0,0,0,0,0,0,1 "));
    assert_eq!(v["payload"]["orbit_dim"], 28);
    assert_eq!(v["payload"]["lagrangian"], true);
}

#[test]
fn grading_report() {
    let v = parse(&grading("G2"));
    assert_eq!(v["payload"]["levi_types"], serde_json::json!(["A1"]));
    assert_eq!(v["payload"]["pieces"]["-1"].as_array().unwrap().len(), 4);
}

#[test]
fn real_form_report() {
    let plain = parse(&real_forms("A3", ""));
    assert_eq!(plain["payload"]["real_forms"].as_array().unwrap().len(), 3);
    let with = parse(&real_forms("A3", "1,0,0"));
    assert!(with["payload"]["real_forms"][0]["signature"].is_object());
}

#[test]
fn errors_are_json() {
    for out in [orbit("A1:1,2"), grading("Z9"), real_forms("B2", "1")] {
        let v = parse(&out);
        assert!(v["error"].as_str().is_some_and(|m| !m.is_empty()), "{out}");
    }
}
