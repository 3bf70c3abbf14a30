use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_szeta"))
        .args(args)
        .env_remove("SZETA_DIGITS")
        .output()
        .expect("spawn szeta")
}

fn records(args: &[&str]) -> Vec<Value> {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice::<Vec<Value>>(&out.stdout).unwrap()
}

fn value(r: &Value) -> f64 {
    r["value"].as_str().unwrap().parse().unwrap()
}

#[test]
fn bessel_half_mzv_are_inverse_odd_factorials() {
    let rs = records(&["values", "bessel", "--nu", "0.5", "--quantity", "mzv2n", "--n", "0..4"]);
    let want = [1.0, 1.0 / 6.0, 1.0 / 120.0, 1.0 / 5040.0, 1.0 / 362880.0];
    assert_eq!(rs.len(), 5);
    for (r, w) in rs.iter().zip(want) {
        assert!((value(r) - w).abs() < 1e-15 * w);
        assert_eq!(r["error_bound"], "exact");
        assert_eq!(r["provenance"], "closed-form");
    }
}

#[test]
fn hyper_unit_parameters() {
    let rs = records(&["values", "hyper", "--a", "1", "--b", "1", "--quantity", "mzv2n", "--n", "1"]);
    assert!((value(&rs[0]) + 1.0 / 12.0).abs() < 1e-16);
}

#[test]
fn airy_zeta_values() {
    let rs = records(&["values", "airy", "--quantity", "zeta", "--n", "2..4"]);
    assert_eq!(rs.len(), 3);
    assert!((value(&rs[0]) - 0.531457231960999).abs() < 1e-14);
    assert_eq!(rs[0]["n"], 2);
}

#[test]
fn bessel_nested_sum_matches_closed_form() {
    let rs = records(&["--digits", "30", "--zeros", "100", "values", "bessel", "--nu", "1/2", "--quantity", "nested", "--n", "2"]);
    let b: f64 = rs[0]["error_bound"].as_str().unwrap().parse().unwrap();
    assert!((value(&rs[0]) - 1.0 / 120.0).abs() <= b + 1e-25);
    assert_eq!(rs[0]["provenance"], "oracle");
}

#[test]
fn zeros_commands() {
    let a = records(&["zeros", "airy", "--count", "3"]);
    assert_eq!(a.len(), 3);
    assert!(a[0]["value"].as_str().unwrap().starts_with("-2.338107410459767038489197252446735440"));
    let h = records(&["zeros", "bessel", "--nu", "0.5", "--count", "2"]);
    assert!((value(&h[1]) - 2.0 * std::f64::consts::PI).abs() < 1e-14);
    let j = records(&["zeros", "bessel", "--nu", "0", "--count", "1"]);
    assert!(j[0]["value"].as_str().unwrap().starts_with("2.404825557695772768621631879326454643"));
}

#[test]
fn zero_cache_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.txt");
    let p = path.to_str().unwrap();
    records(&["zeros", "airy", "--count", "4", "--cache", p]);
    let first = std::fs::read_to_string(&path).unwrap();
    assert_eq!(first.lines().count(), 4);
    records(&["zeros", "bessel", "--nu", "1/3", "--count", "2", "--cache", p]);
    records(&["zeros", "airy", "--count", "2", "--cache", p]);
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 6);
    let rs = records(&["zeros", "airy", "--count", "6", "--cache", p]);
    assert_eq!(rs.len(), 6);
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 8);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "gessel-viennot", "--max", "20"][..],
        &["verify", "krein", "--nu", "0.5", "--n", "1..4"],
        &["verify", "oracle", "--family", "airy", "--depth", "3"],
        &["--digits", "30", "verify", "dissection", "--family", "hyper"],
        &["verify", "airy-bessel"],
    ] {
        let rs = records(args);
        assert!(!rs.is_empty());
        assert!(rs.iter().all(|r| r["status"] == "pass"), "{args:?}");
    }
}

#[test]
fn failing_check_exits_one() {
    // odd r + s in the Lommel suite does not vanish
    let out = run(&["verify", "lommel", "--nu", "3/2", "--max", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let rs: Vec<Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert!(rs.iter().any(|r| r["status"] == "fail"));
    assert!(rs.iter().any(|r| r["status"] == "pass"));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "csv", "values", "airy", "--quantity", "mzv2n", "--n", "0..5"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn csv_header_and_env_digits() {
    let out = Command::new(env!("CARGO_BIN_EXE_szeta"))
        .args(["--format", "csv", "values", "bessel", "--nu", "1/2", "--quantity", "mzv2n", "--n", "1"])
        .env("SZETA_DIGITS", "20")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "quantity,parameters,n,k,value,error_bound,provenance,status");
    let row = lines.next().unwrap();
    assert!(row.contains("0.16666666666666666667,"), "{row}");
}

#[test]
fn usage_errors() {
    for args in [
        &["values", "bessel", "--quantity", "mzv2n"][..],
        &["values", "bessel", "--nu", "1/2", "--quantity", "nope"],
        &["--digits", "10", "values", "airy", "--quantity", "mzv2n"],
        &["values", "bessel", "--nu", "-1", "--quantity", "mzv2n"],
        &["zeros", "hyper", "--a", "1", "--b", "2"],
        &["verify", "oracle", "--depth", "7"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
