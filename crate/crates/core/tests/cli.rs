//! Command-line golden checks: documented outputs, exit codes, determinism
//! and round-tripping of the descriptors printed in reports.

use std::process::Command;

use serde_json::Value;
use spk_core::cli::run;
use spk_core::rootsys::RootSystemDocument;
use spk_core::{IrrepDescriptor, ModuleDescriptor, SimpleType, Weight};

fn spk(args: &[&str]) -> (i32, String) {
    run(std::iter::once("spk").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let (code, out) = spk(args);
    assert_eq!(code, 0, "{out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn e7_56_is_lagrangian() {
    let v = json(&["orbit", "--algebra", "E7", "--weight", "0,0,0,0,0,0,1"]);
    assert_eq!(v["command"], "orbit");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["payload"]["orbit_dim"], 28);
    assert_eq!(v["payload"]["module_dim"], 56);
    assert_eq!(v["payload"]["lagrangian"], true);
    assert_eq!(v["payload"]["levi"], serde_json::json!(["E6"]));
}

#[test]
fn e7_first_fundamental_is_adjoint() {
    let v = json(&["orbit", "--algebra", "E7", "--weight", "1,0,0,0,0,0,0"]);
    assert_eq!(v["payload"]["module_dim"], 133);
    assert_eq!(v["payload"]["orbit_dim"], 34);
    assert_eq!(v["payload"]["lagrangian"], false);
}

#[test]
fn trivial_a1_module() {
    let v = json(&["irrep", "--algebra", "A1", "--weight", "0"]);
    assert_eq!(v["payload"]["dim"], "1");
    assert_eq!(v["payload"]["self_dual"], true);
    assert_eq!(v["payload"]["form"], "orthogonal");
}

#[test]
fn module_flag_matches_weight_flag() {
    let a = json(&["orbit", "--algebra", "D6", "--weight", "0,0,0,0,1,0"]);
    let b = json(&["orbit", "--module", "D6:0,0,0,0,1,0"]);
    assert_eq!(a["payload"], b["payload"]);
    let sum = json(&["orbit", "--module", "C3:1,0,0 + C3:1,0,0"]);
    assert_eq!(sum["payload"]["module_dim"], 12);
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["orbit", "--algebra", "A1", "--weight", "1,2"][..],
        &["orbit", "--algebra", "Q3", "--weight", "1"],
        &["irrep", "--algebra", "B1", "--weight", "1"],
        &["orbit", "--algebra", "A2", "--weight", "1,-1"],
        &["rootsys"],
        &["no-such-command"],
    ] {
        let (code, out) = spk(args);
        assert_eq!(code, 1, "{args:?}: {out}");
        assert!(!out.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    let (code, out) = spk(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify-main-theorem"));
}

#[test]
fn reference_checks_exit_zero() {
    // Exit code 2 is reserved for a failed internal check; on the shipped
    // data neither command reaches it.
    let t = json(&["table1"]);
    assert_eq!(t["command"], "table1");
    let v = json(&["verify-main-theorem"]);
    let cases = v["payload"]["cases"].as_array().unwrap();
    assert!(cases.iter().all(|c| c["pass"] == true));
    assert_eq!(v["payload"]["e7_indices"], serde_json::json!([-133, -25, -5, 7]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["rootsys", "--algebra", "F4"][..],
        &["grading", "--algebra", "E6"],
        &["realforms", "--algebra", "D4", "--weight", "1,0,0,0"],
        &["classify", "--max-classical", "6"],
    ] {
        assert_eq!(spk(args), spk(args), "{args:?}");
        let mut table = args.to_vec();
        table.extend(["--format", "table"]);
        assert_eq!(spk(&table), spk(&table), "{table:?}");
    }
}

#[test]
fn binary_matches_library() {
    let out = Command::new(env!("CARGO_BIN_EXE_spk"))
        .args(["orbit", "--algebra", "B5", "--weight", "0,0,0,0,1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let (_, lib) = spk(&["orbit", "--algebra", "B5", "--weight", "0,0,0,0,1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), lib);

    let bad = Command::new(env!("CARGO_BIN_EXE_spk")).args(["orbit", "--algebra", "A0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());
}

#[test]
fn printed_descriptors_parse_back() {
    let v = json(&["classify", "--max-classical", "6"]);
    let mut seen = 0;
    let mut walk = vec![&v["payload"]];
    while let Some(x) = walk.pop() {
        match x {
            Value::Object(m) => {
                for (k, y) in m {
                    if k == "module" {
                        let s = y.as_str().unwrap();
                        let m: ModuleDescriptor = s.parse().unwrap();
                        assert_eq!(m.to_string(), s);
                        seen += 1;
                    }
                    walk.push(y);
                }
            }
            Value::Array(a) => walk.extend(a),
            _ => {}
        }
    }
    assert!(seen > 10);

    let rs = json(&["rootsys", "--algebra", "G2"]);
    let doc: RootSystemDocument = serde_json::from_value(rs["payload"].clone()).unwrap();
    assert_eq!(doc.simple_type, "G2".parse::<SimpleType>().unwrap());
    assert_eq!(doc.positive_roots.len(), 6);
    assert_eq!(serde_json::to_value(&doc).unwrap(), rs["payload"]);
    let d: IrrepDescriptor = "E8:0,0,0,0,0,0,0,1".parse().unwrap();
    assert_eq!(d.highest_weight, "0,0,0,0,0,0,0,1".parse::<Weight>().unwrap());
    assert_eq!(d.to_string().parse::<IrrepDescriptor>().unwrap(), d);
}
