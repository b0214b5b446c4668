use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulercert"))
        .args(args)
        .env_remove("EULERCERT_N_MAX")
        .output()
        .expect("binary runs")
}

#[test]
fn table_type_d_csv() {
    let out = run(&["table", "--family", "D", "--n-max", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,k0,k1,k2,k3\n0,1\n1,1\n2,1,2,1\n3,1,11,11,1\n");
}

#[test]
fn table_d4_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    let out = run(&["table", "--family", "d", "--n-max", "4", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let d4 = rows.as_array().unwrap().iter().find(|r| r["n"] == 4).unwrap();
    assert_eq!(d4["coeffs"], serde_json::json!(["1/1", "0/1", "-12/1", "0/1", "12/1"]));
}

#[test]
fn table_a0() {
    let out = run(&["table", "--family", "A", "--n-max", "0", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,k0,k1\n0,0,1\n");
}

#[test]
fn verify_suites_exit_zero() {
    let out = run(&["verify", "--suite", "stembridge", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "--suite", "special-values", "--n-max", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["check"] == "D_even_closed_form" && e["n"] == 4 && e["got"] == "16"));
    let out = run(&["verify", "--suite", "transforms", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let d2 = report.as_array().unwrap().iter().find(|e| e["check"] == "d_from_D" && e["n"] == 2).unwrap();
    assert_eq!(d2["got"], "x^2");
    assert_eq!(d2["pass"], true);
}

#[test]
fn certify_compat_single_index() {
    let out = run(&["certify", "--check", "compat", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let items: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let cert = &items[0]["certificate"];
    assert_eq!(cert["claim"], "compatible");
    assert_eq!(cert["verdict"], "pass");
    // {a_1, b_2, d_2}
    assert_eq!(cert["polys"][2], serde_json::json!(["0/1", "0/1", "1/1"]));
}

#[test]
fn certify_rz_count() {
    let out = run(&["certify", "--check", "rz", "--n-max", "12", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",pass")));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["table", "--family", "E", "--n-max", "2"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["certify", "--check", "compat", "--n", "1"]).status.code(), Some(2));
    let out = run(&["verify", "--suite", "stembridge", "--n-max", "9", "--brute-cap", "8"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn environment_overrides_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_eulercert"))
        .args(["table", "--family", "B", "--format", "csv"])
        .env("EULERCERT_N_MAX", "2")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n,k0,k1,k2\n0,1\n1,1,1\n2,1,6,1\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["certify", "--check", "compat", "--n-max", "5", "--seed", "17"];
    let a = run(&args);
    let b = run(&["--jobs", "1", "certify", "--check", "compat", "--n-max", "5", "--seed", "17"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
