use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn vfilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vfilt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = vfilt(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn bfun_of_the_trivial_weight() {
    let o = vfilt(&["bfun", "--space", "det", "--n", "2", "--weight", "0,0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(s+1)(s+2)");
}

#[test]
fn pfun_at_three() {
    let o = vfilt(&["pfun", "--space", "det", "--n", "2", "--weight", "0,0", "--alpha", "3"]);
    assert_eq!(stdout(&o), "(s+1)(s+2)^2");
}

#[test]
fn negative_weights_and_alphas_parse() {
    let o = vfilt(&["nu", "--space", "det", "--n", "2", "--weight", "-1,-3", "--alpha", "-1/2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "0");
    let o = vfilt(&["hodge-level", "--space", "symdet", "--n", "2", "--weight", "2,0", "--alpha", "7/2"]);
    assert!(o.status.success());
}

#[test]
fn e6_ideal_at_small_alpha_is_i2() {
    let v = json(&["ideal", "--space", "e6", "--k", "5", "--alpha", "1/10", "--degree-bound", "8"]);
    let got: Vec<Vec<i64>> = serde_json::from_value(v["weights"].clone()).unwrap();
    let mut want = Vec::new();
    for a1 in 0..=8 {
        for a2 in 0..=8 {
            for a3 in 0..=8 {
                if a2 >= 1 || a3 >= 1 {
                    want.push(vec![a1, a2, a3]);
                }
            }
        }
    }
    assert_eq!(got, want);
    assert_eq!(v["primary_decomposition"][1], serde_json::json!({ "t": 2, "exponent": 1 }));
}

#[test]
fn ideal_routes_agree() {
    for space in [["det", "3"], ["symdet", "3"], ["pfaffian", "4"]] {
        let o = vfilt(&[
            "ideal", "--space", space[0], "--n", space[1], "--k", "3", "--alpha", "1/2", "--degree-bound", "5",
            "--route", "both",
        ]);
        assert!(o.status.success(), "{space:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn inequality_route_outside_unit_interval_is_a_usage_error() {
    let o = vfilt(&["ideal", "--space", "det", "--n", "2", "--k", "1", "--alpha", "3/2", "--route", "inequality"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn character_modes() {
    let all = json(&["character", "--space", "det", "--n", "2", "--alpha", "1", "--level", "2", "--mode", "weight"]);
    let grw = json(&["character", "--space", "det", "--n", "2", "--alpha", "1", "--level", "2", "--mode", "grW"]);
    assert_eq!(all.as_array().unwrap().len(), 28);
    for t in grw.as_array().unwrap() {
        let w: Vec<i64> = serde_json::from_value(t["weight"].clone()).unwrap();
        assert!(w[0] <= -1 && w[1] <= 0, "{w:?}");
        assert_eq!(t["alpha"], "1");
    }
    let o = vfilt(&["character", "--space", "det", "--n", "2", "--alpha", "1", "--level", "0", "--mode", "grWgrV"]);
    assert!(o.status.success());
}

#[test]
fn grv_and_fdf() {
    let v = json(&["grv", "--space", "det", "--n", "2", "--alpha", "2", "--level", "0", "--weight", "0,0"]);
    assert_eq!(v["entries"][0]["nu"], 2);
    assert_eq!(v["entries"][0]["exponent"], 1);
    let m = json(&["fdf-matrices", "--space", "det", "--n", "2", "--weight", "0,0", "--alpha", "1", "--level", "5"]);
    assert_eq!((m["rho"].clone(), m["nu"].clone(), m["mu"].clone()), (1.into(), 1.into(), 0.into()));
}

#[test]
fn v_ideal_and_v_cap_f() {
    let o = vfilt(&["v-ideal", "--space", "det", "--n", "2", "--weight", "0,0", "--alpha", "3"]);
    assert_eq!(stdout(&o), "(s+1)(s+2)^2");
    let v = json(&["v-cap-f", "--space", "det", "--n", "2", "--weight", "0,0", "--alpha", "2", "--k", "2"]);
    assert_eq!(v["basis"], serde_json::json!([["1", "1"], ["0", "1", "1"]]));
}

#[test]
fn fs_test_with_pi_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"r_lambda": -1, "pi": {{"2": [0, 1, 2], "3": [0, 1, 2, 3]}}}}"#).unwrap();
    let path = f.path().to_str().unwrap();
    let base = ["fs-test", "--space", "det", "--n", "2", "--weight", "0,0", "--alpha", "3", "--pi-file", path];
    let o = vfilt(&[&base[..], &["--k", "3"]].concat());
    assert_eq!(stdout(&o), "true");
    let o = vfilt(&[&base[..], &["--k", "2"]].concat());
    assert_eq!(stdout(&o), "false");
    let o = vfilt(&[&base[..], &["--k", "4"]].concat());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn user_family_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"name": "cubic", "dim": 27, "d": 3, "generators": 3, "degrees": [1, 2, 3], "sigma_index": 3,
            "r": ["1", "5", "9"], "c": [[0, 0, 1], [0, 1, 1], [1, 1, 1]]}}"#
    )
    .unwrap();
    let path = f.path().to_str().unwrap();
    let o = vfilt(&["bfun", "--space-file", path, "--weight", "1,2,-1"]);
    let builtin = vfilt(&["bfun", "--space", "e6", "--weight", "1,2,-1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), stdout(&builtin));
    assert_eq!(stdout(&o), "s(s+6)(s+11)");
}

#[test]
fn bad_family_files_are_rejected() {
    for doc in [
        r#"{"name": "x", "dim": 2, "d": 1, "generators": 1, "degrees": [1], "sigma_index": 1, "r": ["1"], "c": [["2"]]}"#,
        r#"{"name": "x", "dim": 2, "d": 2, "generators": 1, "degrees": [1], "sigma_index": 1, "r": ["1"], "c": [["1"]]}"#,
        r#"{"name": "x", "dim": 2, "d": 1, "generators": 1, "degrees": [1], "sigma_index": 0, "r": ["1"], "c": [["1"]]}"#,
        "not json",
    ] {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(doc.as_bytes()).unwrap();
        let o = vfilt(&["bfun", "--space-file", f.path().to_str().unwrap(), "--weight", "0"]);
        assert_eq!(o.status.code(), Some(1), "{doc}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(vfilt(&["--help"]).status.code(), Some(0));
    assert_eq!(vfilt(&["--version"]).status.code(), Some(0));
    assert_eq!(vfilt(&[]).status.code(), Some(1));
    assert_eq!(vfilt(&["bfun", "--space", "nope", "--n", "2", "--weight", "0"]).status.code(), Some(1));
    assert_eq!(vfilt(&["bfun", "--space", "det", "--weight", "0,0"]).status.code(), Some(1));
    assert_eq!(vfilt(&["bfun", "--space", "det", "--n", "2", "--weight", "0,1"]).status.code(), Some(1));
    assert_eq!(vfilt(&["bfun", "--space", "det", "--n", "2", "--weight", "a,b"]).status.code(), Some(1));
    assert_eq!(vfilt(&["pfun", "--space", "det", "--n", "2", "--weight", "0,0", "--alpha", "1/0"]).status.code(), Some(1));
}

#[test]
fn check_suite_passes() {
    let o = vfilt(&["check", "--seed", "3", "--cases", "40"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| !l.starts_with("FAIL")));
}
