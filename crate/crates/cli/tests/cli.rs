use std::process::{Command, Output};

use serde_json::Value;

fn jpl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jpl"))
        .args(args)
        .output()
        .expect("jpl runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = jpl(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).expect("valid JSON")
}

#[test]
fn expand_text_and_json() {
    let o = jpl(&["expand", "eta*theta(1)", "--prec", "48"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("weight 1, index 1/2, v_eta^4, v_H^1, Cusp"), "{s}");
    assert!(s.contains("[q^(4/24)] (-1)*r^(-1/2) + r^(1/2)"), "{s}");
    let v = json(&["expand", "phi(0,1)", "--prec", "48"]);
    assert_eq!(v["index2"], 2);
    assert_eq!(v["class"], "weak");
}

#[test]
fn dim_examples() {
    for (k, m, d) in [("6", "5", "1"), ("3", "8", "0"), ("12", "1", "1"), ("7", "3", "0")] {
        let o = jpl(&["dim", "--weight", k, "--index", m]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).trim(), d, "dim J^c({k}, {m})");
    }
    assert_eq!(json(&["dim", "--weight", "3", "--index", "13"])["dim"], 1);
}

#[test]
fn exit_codes() {
    assert_eq!(jpl(&["expand", "foo(1)"]).status.code(), Some(2));
    assert_eq!(jpl(&["expand", "theta(1"]).status.code(), Some(2));
    assert_eq!(jpl(&["dim", "--weight", "3"]).status.code(), Some(2));
    assert_eq!(jpl(&["dim", "--weight", "3", "--index", "0"]).status.code(), Some(2));
    assert_eq!(jpl(&["--prec", "0", "expand", "eta"]).status.code(), Some(2));
    assert_eq!(jpl(&["group", "--t", "0"]).status.code(), Some(2));
    // a well-formed seed with the wrong multiplier is a failed check, not a usage error
    let o = jpl(&["lift", "eta*theta(1)", "--Q", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("multiplier"));
    assert_eq!(jpl(&["verify", "--suite", "dims"]).status.code(), Some(0));
}

#[test]
fn lift_with_symmetry() {
    let o = jpl(&["lift", "eta^18*theta(1)^2", "--Q", "1", "--symmetry", "--prec", "72"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    assert!(s.contains("t = 1, weight 20/2"), "{s}");
    assert!(s.contains(", 0 violations"), "{s}");
    let v = json(&["lift", "eta*theta(1)", "--Q", "6", "--prec", "48", "--symmetry"]);
    assert_eq!(v["t"], 3);
    assert_eq!(v["symmetry"]["violations"].as_array().map(Vec::len), Some(0));
}

#[test]
fn group_views() {
    let s = stdout(&jpl(&["group", "--t", "3"]));
    assert!(s.contains("abelianization Z/3 x Z/6"), "{s}");
    assert!(s.contains("18 characters"), "{s}");
    let k = json(&["group", "--t", "3", "--show", "kernels"]);
    assert_eq!(k.as_array().map(Vec::len), Some(10));
    let c = json(&["group", "--t", "12", "--show", "characters"]);
    assert_eq!(c.as_array().map(Vec::len), Some(144));
    let ids = jpl(&["group", "--t", "6", "--show", "identities"]);
    assert!(ids.status.success());
    assert!(stdout(&ids).contains("erratum"));
}

#[test]
fn verify_is_deterministic() {
    let a = jpl(&["--json", "verify", "--suite", "all"]);
    let b = jpl(&["--json", "verify", "--suite", "all"]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn genus_table_lists_every_level() {
    let o = jpl(&["genus-table"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    for t in [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 24, 30, 36] {
        assert!(s.contains(&format!("t = {t:>2}:")), "missing t = {t}");
    }
    assert!(!s.contains("FAIL"));
}
