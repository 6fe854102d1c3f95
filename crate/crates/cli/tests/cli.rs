use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/data")
        .join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie-jcd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn decompose_nilpotent_generator_of_sl2() {
    let dir = TempDir::new().unwrap();
    let e = write(&dir, "e.json", r#"["1", "0", "0"]"#);
    let out = run(&["decompose", path(&data("sl2")), &e]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    assert_eq!(strings(&doc["S"]), ["0", "0", "0"]);
    assert_eq!(strings(&doc["N"]), ["1", "0", "0"]);
    assert_eq!(doc["checks"]["all_passed"], Value::Bool(true));
    assert!(doc["realization"]["N"].is_array());
    assert!(out.stderr.is_empty());
}

#[test]
fn element_outside_derived_algebra_exits_2() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", r#"["1"]"#);
    let out = run(&["decompose", path(&data("line")), &x]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not in the derived algebra"));

    let id = write(&dir, "id.json", r#"{"matrix": [["1", "0"], ["0", "1"]]}"#);
    assert_eq!(run(&["decompose", path(&data("gl2")), &id]).status.code(), Some(2));
}

#[test]
fn closure_reports_the_offending_pair() {
    let dir = TempDir::new().unwrap();
    let alg = write(
        &dir,
        "open.json",
        r#"{"mode": "matrix", "n": 2, "basis": [[["0", "1"], ["0", "0"]], [["0", "0"], ["1", "0"]]]}"#,
    );
    let out = run(&["closure", &alg]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0 and 1"));

    let out = run(&["closure", &alg, "--auto-close"]);
    assert_eq!(out.status.code(), Some(0));
    let closed = json(&out);
    assert_eq!(closed["basis"].as_array().unwrap().len(), 3);
    let again = write(&dir, "closed.json", &String::from_utf8_lossy(&out.stdout));
    assert_eq!(run(&["closure", &again]).status.code(), Some(0));
    assert_eq!(
        run(&["decompose", &again, &write(&dir, "h.json", r#"[0, 0, 1]"#)])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn certificates_round_trip_through_verify() {
    let dir = TempDir::new().unwrap();
    for (fixture, x) in [
        ("sl2_ltimes_q2", r#"["0", "1", "0", "1", "0"]"#),
        ("sl2_ltimes_heisenberg5", r#"[-12, -19, -28, -33, 6, 8, 16, 10]"#),
        ("sl2_plus_heisenberg_structure", r#"[1, 2, -1, 0, 0, 3]"#),
        ("sl3", r#"[1, 0, 2, 0, 0, 1, 1, -1]"#),
    ] {
        let x = write(&dir, "x.json", x);
        let out = run(&["decompose", path(&data(fixture)), &x, "--rep", "dual(adjoint)"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{fixture}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let cert = write(&dir, "cert.json", &String::from_utf8_lossy(&out.stdout));
        let out = run(&["verify", path(&data(fixture)), &cert]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{fixture}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
        let report = json(&out);
        assert_eq!(report["all_passed"], Value::Bool(true));
        assert_eq!(report["agrees_with_recomputation"], Value::Bool(true));
    }
}

#[test]
fn verify_rejects_a_tampered_certificate() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", r#"[1, 1, 0]"#);
    let out = run(&["decompose", path(&data("sl2")), &x]);
    let mut cert = json(&out);
    cert["S"] = serde_json::json!(["2", "1", "0"]);
    cert["N"] = serde_json::json!(["-1", "0", "0"]);
    let cert = write(&dir, "cert.json", &cert.to_string());
    let out = run(&["verify", path(&data("sl2")), &cert]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["all_passed"], Value::Bool(false));
    assert_eq!(report["commutation"], Value::Bool(false));
}

#[test]
fn emit_internals_adds_subspace_bases() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", r#"[0, 1, 0, 1, 0]"#);
    let plain = json(&run(&["decompose", path(&data("sl2_ltimes_q2")), &x]));
    assert!(plain.get("internals").is_none());
    let out = run(&["decompose", path(&data("sl2_ltimes_q2")), &x, "--emit-internals"]);
    let doc = json(&out);
    assert_eq!(doc["nstar_dim"], 2);
    assert_eq!(doc["internals"]["nstar"].as_array().unwrap().len(), 2);
    assert_eq!(doc["internals"]["levi"].as_array().unwrap().len(), 3);
    assert_eq!(strings(&doc["b"]), ["0", "0", "0", "1", "0"]);
}

#[test]
fn matrix_jcd_worked_example() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.json", r#"[["1", "1", "0"], ["0", "1", "0"], ["0", "0", "2"]]"#);
    let out = run(&["matrix-jcd", &m]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(
        doc["semisimple"],
        serde_json::json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]])
    );
    assert_eq!(
        doc["nilpotent"],
        serde_json::json!([["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]])
    );
}

#[test]
fn radical_and_levi_of_gl2() {
    let out = run(&["radical", path(&data("gl2"))]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["radical"], serde_json::json!([["1", "0", "0", "1"]]));
    assert_eq!(doc["center"], doc["radical"]);
    assert_eq!(doc["solvable"], Value::Bool(false));

    let doc = json(&run(&["levi", path(&data("gl2"))]));
    assert_eq!(doc["levi"].as_array().unwrap().len(), 3);
    assert_eq!(doc["nilpotent_ideal"].as_array().unwrap().len(), 0);
}

#[test]
fn invalid_input_exits_4() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.json", r#"["1", "0", "0"]"#);
    let bad = write(&dir, "bad.json", r#"{"mode": "matrix", "n": 2, "basis": [[["0.5"]]]}"#);
    let short = write(&dir, "short.json", r#"["1"]"#);
    let z = write(&dir, "z.json", r#"["0", "0", "1"]"#);
    let missing = dir.path().join("missing.json");
    let sl2 = data("sl2");
    for args in [
        vec!["decompose", path(&sl2), &short],
        vec!["decompose", &bad, &x],
        vec!["decompose", path(&sl2), path(&missing)],
        vec!["decompose", path(&sl2), &x, "--rep", "tensor(natural"],
        vec!["decompose", path(&data("heisenberg_structure")), &z, "--rep", "natural"],
        vec!["matrix-jcd", &short],
        vec!["frobnicate"],
        vec!["decompose", path(&sl2)],
    ] {
        let out = run(&args);
        assert_eq!(
            out.status.code(),
            Some(4),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}
