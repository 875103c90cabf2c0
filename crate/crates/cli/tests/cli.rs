//! End-to-end checks of the scattered-lab binary: exit codes, report
//! shapes, and the byte-determinism contract.

use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_scattered-lab"));
    // Keep runs hermetic: an inherited seed would change sampled reports.
    c.env_remove("SCATTERED_LAB_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("binary exits normally")
}

fn json(out: &Output) -> Value {
    assert_eq!(
        code(out),
        0,
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn field_info_prints_the_deterministic_tower() {
    let v = json(&run(&["field-info", "--p", "3", "--e", "1"]));
    assert_eq!(v["command"], "field-info");
    let r = &v["runs"][0];
    assert_eq!(r["field"]["p"], 3);
    assert_eq!(r["field"]["e"], 1);
    assert_eq!(r["field"]["modulus"].as_array().unwrap().len(), 7);
    assert_eq!(r["field"]["modulus"][6], 1);
    assert_eq!(r["report"]["q"], 3);
    assert_eq!(r["report"]["parity"], "odd");
    assert_eq!(r["report"]["extension_degree"], 6);
    assert_eq!(r["report"]["multiplicative_order"], 728);
    assert_eq!(r["report"]["modulus_irreducible"], true);
    assert_eq!(r["generator"].as_array().unwrap().len(), 6);
}

#[test]
fn field_info_rejects_composite_characteristic() {
    let out = run(&["field-info", "--p", "4", "--e", "1"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn field_info_accepts_a_modulus_override() {
    // x^6 + x^3 + 1 is irreducible over F_2.
    let v = json(&run(&[
        "field-info",
        "--p",
        "2",
        "--e",
        "1",
        "--modulus",
        "1,0,0,1,0,0,1",
    ]));
    let m: Vec<u64> = v["runs"][0]["field"]["modulus"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d.as_u64().unwrap())
        .collect();
    assert_eq!(m, vec![1, 0, 0, 1, 0, 0, 1]);

    // x^6 + 1 = (x+1)^6 over F_2 is rejected, as is a wrong length.
    let reducible = run(&["field-info", "--p", "2", "--modulus", "1,0,0,0,0,0,1"]);
    assert_eq!(code(&reducible), 2);
    let short = run(&["field-info", "--p", "2", "--modulus", "1,1,1"]);
    assert_eq!(code(&short), 2);
}

#[test]
fn scattered_single_parameter_with_oracle() {
    let v = json(&run(&["scattered", "--q", "3", "--b", "g^1", "--oracle"]));
    let r = &v["runs"][0]["report"];
    assert_eq!(r["total"], 1);
    let item = &r["items"][0];
    assert!(item["verdict"]["scattered"].is_boolean());
    assert_eq!(item["oracle_agrees"], true);
    assert_eq!(
        item["oracle_scattered"],
        item["verdict"]["scattered"]
    );
}

#[test]
fn scattered_norm_one_is_never_scattered() {
    let v = json(&run(&["scattered", "--q", "3", "--n", "g^0"]));
    let item = &v["runs"][0]["report"]["items"][0];
    assert_eq!(item["verdict"]["scattered"], false);
    assert!(item["verdict"]["b"].is_null());
    assert_eq!(item["verdict"]["route"], "criterion_odd");
    // The capital alias accepts the same query.
    let alias = json(&run(&["scattered", "--q", "3", "--N", "g^0"]));
    assert_eq!(alias, v);
}

#[test]
fn scattered_sweep_counts_the_family_at_q3() {
    let v = json(&run(&["scattered", "--q", "3", "--sweep", "--oracle"]));
    let r = &v["runs"][0]["report"];
    assert_eq!(r["total"], 26);
    assert_eq!(r["scattered_count"], 6);
    for item in r["items"].as_array().unwrap() {
        assert_eq!(item["oracle_agrees"], true);
    }
}

#[test]
fn scattered_never_holds_in_characteristic_two_base() {
    let v = json(&run(&["scattered", "--q", "2", "--sweep"]));
    let r = &v["runs"][0]["report"];
    assert_eq!(r["total"], 7);
    assert_eq!(r["scattered_count"], 0);
}

#[test]
fn scattered_rejects_bad_parameters() {
    // Zero parameter.
    let zero = run(&["scattered", "--q", "3", "--b", "0,0,0,0,0,0"]);
    assert_eq!(code(&zero), 2);
    // A norm outside the cubic subfield.
    let outside = run(&["scattered", "--q", "3", "--n", "g^1"]);
    assert_eq!(code(&outside), 2);
    // Conflicting targets, then no target at all.
    let both = run(&["scattered", "--q", "3", "--b", "g^1", "--n", "g^0"]);
    assert_eq!(code(&both), 2);
    let none = run(&["scattered", "--q", "3"]);
    assert_eq!(code(&none), 2);
    // Digit out of range and malformed power.
    let digit = run(&["scattered", "--q", "3", "--b", "7,0,0,0,0,0"]);
    assert_eq!(code(&digit), 2);
    let power = run(&["scattered", "--q", "3", "--b", "g^x"]);
    assert_eq!(code(&power), 2);
    // The oracle needs a concrete parameter, not just a norm.
    let norm_oracle = run(&["scattered", "--q", "3", "--n", "g^0", "--oracle"]);
    assert_eq!(code(&norm_oracle), 2);
}

#[test]
fn gamma_sizes_match_for_small_prime_powers() {
    let v = json(&run(&["gamma", "--q", "2,3,4,5"]));
    let sizes: Vec<u64> = v["runs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["report"]["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, vec![0, 6, 21, 46]);
    for r in v["runs"].as_array().unwrap() {
        assert_eq!(r["report"]["matches_conjecture"], true);
        assert_eq!(r["report"]["matches_closed_form"], true);
        assert_eq!(r["report"]["oracle_checked"], false);
    }

    let oracled = json(&run(&["gamma", "--q", "3", "--oracle"]));
    assert_eq!(oracled["runs"][0]["report"]["oracle_checked"], true);
}

#[test]
fn gamma_renders_a_table() {
    let out = run(&["gamma", "--q", "2,3", "--format", "table"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3, "header plus one row per q:\n{text}");
    assert!(lines[0].contains("size") && lines[0].contains("match"));
    assert!(lines[1].contains("true"));
    assert!(lines[2].contains("true"));
}

#[test]
fn cubics_census_matches_at_q4() {
    let v = json(&run(&["cubics", "--q", "4"]));
    let r = &v["runs"][0]["report"];
    assert_eq!(r["parity"], "even");
    assert_eq!(r["total"], 24);
    assert_eq!(r["gamma0"], 7);
    assert_eq!(r["gamma1"], 8);
    assert_eq!(r["gamma2"], 5);
    assert_eq!(r["gamma3"], 4);
    assert_eq!(r["predicted_gamma_size"], 21);
    assert_eq!(r["all_match"], true);
}

#[test]
fn orbits_bound_holds_at_q4() {
    let v = json(&run(&["orbits", "--q", "4"]));
    let r = &v["runs"][0]["report"];
    assert_eq!(r["gamma_size"], 21);
    assert_eq!(r["orbits"]["bound_holds"], true);
    assert!(r["orbits"]["orbit_count"].as_u64().unwrap() >= 4);
    let total: u64 = r["orbits"]["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o.as_array().unwrap().len() as u64)
        .sum();
    assert_eq!(total, 21);
}

#[test]
fn mrd_scan_reports_three_scattered_parameters() {
    let v = json(&run(&["mrd", "--q", "3", "--scan", "3"]));
    let items = v["runs"][0]["report"]["items"].as_array().unwrap();
    assert_eq!(items.len(), 3);
    for r in items {
        assert_eq!(r["scattered"], true);
        assert_eq!(r["is_mrd"], true);
        assert_eq!(r["agrees_with_scatteredness"], true);
        assert_eq!(r["min_nonzero_rank"], 5);
        assert_eq!(r["mode"]["kind"], "sampled");
        assert_eq!(r["mode"]["seed"], 42);
    }
}

#[test]
fn mrd_exhaustive_verdict_in_the_smallest_field() {
    let v = json(&run(&["mrd", "--q", "2", "--b", "g^1", "--exhaustive"]));
    let r = &v["runs"][0]["report"]["items"][0];
    assert_eq!(r["scattered"], false);
    assert_eq!(r["is_mrd"], false);
    assert_eq!(r["agrees_with_scatteredness"], true);
    assert_eq!(r["mode"]["kind"], "exhaustive");
    assert_eq!(r["code_size"], 4096);
}

#[test]
fn mrd_seed_comes_from_the_environment() {
    let out = bin()
        .args(["mrd", "--q", "3", "--scan", "1"])
        .env("SCATTERED_LAB_SEED", "7")
        .output()
        .expect("binary runs");
    let v = json(&out);
    assert_eq!(v["runs"][0]["report"]["items"][0]["mode"]["seed"], 7);

    let bad = bin()
        .args(["mrd", "--q", "3", "--scan", "1"])
        .env("SCATTERED_LAB_SEED", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(code(&bad), 2);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let configs: [&[&str]; 4] = [
        &["gamma", "--q", "3,4"],
        &["scattered", "--q", "3", "--sweep", "--oracle"],
        &["mrd", "--q", "3", "--scan", "1"],
        &["orbits", "--q", "4"],
    ];
    for args in configs {
        let first = run(args);
        let second = run(args);
        assert_eq!(code(&first), 0);
        assert_eq!(first.stdout, second.stdout, "config {args:?}");
    }
    // Thread count must not leak into the report bytes.
    let parallel = run(&["mrd", "--q", "3", "--scan", "2"]);
    let serial = run(&["mrd", "--q", "3", "--scan", "2", "--serial"]);
    assert_eq!(parallel.stdout, serial.stdout);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["gamma"])), 2);
    assert_eq!(code(&run(&["no-such-command"])), 2);
    assert_eq!(code(&run(&["gamma", "--q", "6"])), 2);
    assert_eq!(code(&run(&["scattered", "--b", "g^1"])), 2); // no field
    assert_eq!(code(&run(&["mrd", "--q", "3", "--scan", "0", "--exhaustive", "--sample", "5"])), 2);
    assert_eq!(code(&run(&["scattered", "--q", "9999", "--sweep"])), 2);
}
