use std::io::Write;
use std::process::{Command, Stdio};

fn hecke(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hecke"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = hecke(args, None);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn mass_example() {
    let v = json(&["mass", "--family", "unitary-field", "--disc", "-4", "--n", "3", "--ell", "5"]);
    assert_eq!(v["value"], "31/384");
    let v = json(&["mass", "--family", "g2"]);
    assert_eq!(v["value"], "1/6048");
}

#[test]
fn mass_from_spec_file() {
    let dir = std::env::temp_dir().join(format!("hecke-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("spec.json");
    std::fs::write(&p, r#"{"family": "unitary-field", "disc": -19, "n": 3}"#).unwrap();
    let v = json(&["mass", "--spec", p.to_str().unwrap()]);
    assert_eq!(v["value"], "11/48");
    let out = dir.join("out.json");
    let (code, stdout, _) = hecke(&["mass", "--spec", p.to_str().unwrap(), "--output", out.to_str().unwrap()], None);
    assert_eq!((code, stdout.as_str()), (0, ""));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["value"], "11/48");
}

#[test]
fn primes_lists_depths() {
    let v = json(&["primes", "--family", "unitary-field", "--disc", "-4", "--n", "3", "--ell", "5"]);
    assert_eq!(v["primes"], serde_json::json!([{ "p": 31, "depth": 1 }]));
}

#[test]
fn brandt_lists_mod_5_system() {
    let v = json(&["brandt", "--disc", "11", "--bound", "20"]);
    assert_eq!(v["mass"], "5/6");
    assert_eq!(v["h"], 2);
    let c = v["congruences"].as_array().unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0]["p"], 5);
}

#[test]
fn congmod_reports_the_lattice_quotient() {
    let v = json(&["congmod", "6"]);
    assert_eq!(v["invariant_factors"], serde_json::json!([6]));
    // the quotient is always cyclic of order |H|
    let v = json(&["congmod", "2", "4"]);
    assert_eq!(v["group_invariant_factors"], serde_json::json!([2, 4]));
    assert_eq!(v["invariant_factors"], serde_json::json!([8]));
    assert_eq!(v["isomorphic_to_group"], false);
}

#[test]
fn satake_degrees() {
    let v = json(&["satake", "--lambda", "1,1", "--n", "3", "--q", "2"]);
    assert_eq!(v["degree"], "7");
    assert_eq!(v["coset_count"], 7);
}

#[test]
fn check_and_lift() {
    let (code, out, _) = hecke(&["check", "-"], Some(r#"{"predicate": "pgl2", "p": 5, "q": 11, "alpha": "q^1/2", "k": 2}"#));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["congruent"], true);
    let (_, out, _) = hecke(&["check", "-"], Some(r#"{"predicate": "pgl2", "p": 5, "q": 11, "alpha": 3, "k": 2}"#));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["congruent"], false);
    let v = json(&["lift", "--kind", "yoshida", "--samples", "10"]);
    assert_eq!(v["failures"], 0);
}

#[test]
fn detect_on_bundled_tables() {
    let v = json(&["detect", "--dataset", "q5_u3_tables", "--prime", "1,5,1"]);
    assert_eq!(v["prime"]["p"], 31);
    let cmp = v["comparisons"].as_array().unwrap();
    assert_eq!(cmp.iter().filter(|c| c["congruent"] == true).count(), 7);
}

#[test]
fn detect_on_matrices() {
    let doc = r#"{"weights": [2, 3], "operators": [{"name": "T2", "degree": 3, "matrix": [[1, 2], [3, 0]]}]}"#;
    let (code, out, _) = hecke(&["detect", "--input", "-"], Some(doc));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["mass"], "5/6");
    assert_eq!(v["congruences"][0]["p"], 5);
}

#[test]
fn data_dir_override() {
    let dir = std::env::temp_dir().join(format!("hecke-data-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("examples.json"), r#"{"overridden": true}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_hecke")).args(["data", "examples"]).env("HECKE_DATA_DIR", &dir).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["overridden"], true);
    // files missing from the directory fall back to the bundled copy
    let out = Command::new(env!("CARGO_BIN_EXE_hecke")).args(["data", "trivial_degrees"]).env("HECKE_DATA_DIR", &dir).output().unwrap();
    assert!(out.status.success());
}

#[test]
fn exit_codes() {
    assert_eq!(hecke(&["mass", "--family", "nope"], None).0, 2);
    assert_eq!(hecke(&["frobnicate"], None).0, 2);
    assert_eq!(hecke(&["check", "-"], Some("{not json")).0, 2);
    assert_eq!(hecke(&["brandt", "--disc", "6"], None).0, 2);
    assert_eq!(hecke(&["--help"], None).0, 0);
    // a well-formed request that the enumeration limits reject
    assert_eq!(hecke(&["brandt", "--disc", "389", "--bound", "3"], None).0, 1);
}

#[test]
fn byte_identical_outputs() {
    let args = ["brandt", "--disc", "23", "--bound", "11"];
    let a = hecke(&args, None).1;
    let b = hecke(&args, None).1;
    assert_eq!(a, b);
    assert!(!a.contains('.'), "no floating point in the output");
}

#[test]
fn manifest_runs_jobs_in_order() {
    let m = r#"[{"args": ["congmod", "3"]}, {"args": ["mass", "--family", "g2"]}, {"args": ["brandt", "--disc", "12"]}]"#;
    let (code, out, _) = hecke(&["run", "-"], Some(m));
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["result"]["invariant_factors"], serde_json::json!([3]));
    assert_eq!(v[1]["result"]["value"], "1/6048");
    assert_eq!(v[2]["exit"], 2);
}
