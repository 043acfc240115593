use serde_json::Value;
use std::process::{Command, Output};

fn qflag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qflag"))
        .args(args)
        .env_remove("QFLAG_MAX_HEIGHT")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn weyl_character_passes() {
    let out = qflag(&["verify", "weyl-character", "--type", "A1", "--max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("7 passed, 0 failed"), "{text}");
}

#[test]
fn basis_a2_degree_one_one() {
    let out = qflag(&["basis", "--type", "A2", "--degree", "<1,1>"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dimension"], 2);
    assert_eq!(v["schema"], 1);
}

#[test]
fn injected_fault_exits_one_with_counterexample() {
    let out = qflag(&["verify", "relations", "--type", "A1", "--cutoff", "[2]", "--inject-fault", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["pass"], false);
    let failed: Vec<&Value> = v["outcomes"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|o| o["pass"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|o| o["counterexample"].is_string()));
}

#[test]
fn same_run_without_fault_passes() {
    let out = qflag(&["verify", "relations", "--type", "A1", "--cutoff", "[2]"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["bogus"][..],
        &["basis", "--type", "A2", "--degree", "<1,1>", "--frobnicate"],
        &["basis", "--type", "Z9", "--degree", "<1>"],
        &["basis", "--degree", "<1>"],
        &["basis", "--type", "A2", "--degree", "<1>"],
        &["verify", "no-such-suite", "--type", "A1"],
        &["module", "--type", "A1", "--lambda", "[1]", "--kind", "verma"],
    ] {
        let out = qflag(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn caps_and_override() {
    let out = qflag(&["basis", "--type", "A1", "--degree", "<9>"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_qflag"))
        .args(["basis", "--type", "A1", "--degree", "<9>"])
        .env("QFLAG_MAX_HEIGHT", "12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["dimension"], 1);
}

#[test]
fn explicit_cartan_matrix_matches_preset() {
    let a = qflag(&["cartan", "--type", "B2"]);
    let b = qflag(&["cartan", "--cartan-matrix", "2,-1;-2,2"]);
    let (mut a, mut b) = (json(&a), json(&b));
    a.as_object_mut().unwrap().remove("name");
    b.as_object_mut().unwrap().remove("name");
    assert_eq!(a, b);
}

#[test]
fn json_is_byte_identical_and_scalars_are_strings() {
    let args = ["rmatrix", "--type", "A1", "--lambda", "[1]", "--mu", "[1]"];
    let (x, y) = (qflag(&args), qflag(&args));
    assert_eq!(x.stdout, y.stdout);
    let v = json(&x);
    for row in v["matrix"].as_array().unwrap() {
        assert!(row.as_array().unwrap().iter().all(Value::is_string));
    }
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn coord_dimensions_a1() {
    let v = json(&qflag(&["coord", "--type", "A1", "--cutoff", "[3]"]));
    let dims: Vec<u64> = v["grades"].as_array().unwrap().iter().map(|g| g["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 2, 3, 4]);
}
