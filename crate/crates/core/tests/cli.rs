use std::process::{Command, Output};

use serde_json::Value;

fn octosieve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octosieve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = octosieve(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn triplets_parity_word() {
    let out = octosieve(&["triplets", "--algebra", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("++--+--"), "{text}");

    let v = json(&["triplets", "--algebra", "1", "--format", "json"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["parity"], "++--+--");
    assert_eq!(v["triplets"][2], serde_json::json!([5, 2, 7]));
    assert_eq!(v["chirality"], "left");
}

#[test]
fn tables_json() {
    let v = json(&["tables", "--algebra", "4", "--format", "json"]);
    assert_eq!(v["table"][1][2], "-i3");
    assert_eq!(v["table"][3][3], "-1");
    assert_eq!(v["table"][0][5], "+i5");
}

#[test]
fn orbit_lists_sixteen_rules() {
    let v = json(&["orbit", "--format", "json"]);
    let orbit = v["orbit"].as_array().unwrap();
    assert_eq!(orbit.len(), 16);
    assert_eq!(orbit[5]["automorphism"], "T1*T3");
    assert_eq!(orbit[5]["parity"], "--+++--");
    assert_eq!(orbit[12]["parity"], "-------");
}

#[test]
fn sieve_sum_is_invariant() {
    let v = json(&[
        "sieve",
        "--expr",
        "a+b",
        "--assign",
        "a=1,2,3,4,5,6,7,8",
        "--assign",
        "b=i3",
        "--format",
        "json",
    ]);
    assert_eq!(v["invariant"], true);
    assert!(v["witness"].is_null());
    let distances = v["distances"].as_array().unwrap();
    assert_eq!(distances.len(), 16);
    for g in &distances[1..] {
        assert!(g
            .as_array()
            .unwrap()
            .iter()
            .all(|c| c.as_f64() == Some(0.0)));
    }
    assert_eq!(
        v["mean_function_value"],
        serde_json::json!([1.0, 2.0, 3.0, 5.0, 5.0, 6.0, 7.0, 8.0])
    );
    assert_eq!(v["functions"].as_array().unwrap().len(), 16);
}

#[test]
fn sieve_product_prints_witness() {
    let v = json(&[
        "sieve",
        "--expr",
        "a*b",
        "--random-assign",
        "--seed",
        "9",
        "--format",
        "json",
    ]);
    assert_eq!(v["invariant"], false);
    assert!(v["witness"]["distance_index"].as_u64().unwrap() > 0);
}

#[test]
fn identical_argv_gives_identical_bytes() {
    let args = [
        "sieve",
        "--expr",
        "(a*b)*c - a*(b*c)",
        "--random-assign",
        "--seed",
        "42",
        "--trials",
        "8",
        "--format",
        "json",
    ];
    assert_eq!(octosieve(&args).stdout, octosieve(&args).stdout);
    let args = [
        "derive",
        "--u",
        "i1",
        "--v",
        "i2",
        "--expr",
        "a*b",
        "--random-assign",
        "--seed",
        "3",
        "--format",
        "json",
    ];
    assert_eq!(octosieve(&args).stdout, octosieve(&args).stdout);
}

#[test]
fn derive_basis_cases() {
    let v = json(&[
        "derive", "--u", "i1", "--v", "i2", "--expr", "a", "--assign", "a=i4", "--all", "--format",
        "json",
    ]);
    assert_eq!(v["outputs"].as_array().unwrap().len(), 16);
    assert_eq!(
        v["outputs"][0]["derivation"],
        serde_json::json!([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -2.0])
    );
    assert_eq!(v["all_equal"], false);

    let v = json(&[
        "derive",
        "--u",
        "i1",
        "--v",
        "i2",
        "--expr",
        "a",
        "--assign",
        "a=i3",
        "--algebra",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(v["outputs"].as_array().unwrap().len(), 1);
    assert_eq!(v["outputs"][0]["algebra"], 5);
    assert_eq!(v["all_equal"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(
        octosieve(&["tables", "--algebra", "99"]).status.code(),
        Some(1)
    );
    assert_eq!(
        octosieve(&["sieve", "--expr", "a*("]).status.code(),
        Some(1)
    );
    assert_eq!(octosieve(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        octosieve(&["derive", "--u", "i9", "--v", "i1", "--expr", "a"])
            .status
            .code(),
        Some(2)
    );
    let out = octosieve(&["sieve", "--expr", "a*b", "--assign", "a=i1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unbound variable `b`"));
}

#[test]
fn verify_quick_passes() {
    let out = octosieve(&["verify", "--quick"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("12/12 checks passed"));
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 12);
}
