use std::path::PathBuf;
use std::sync::Arc;

use serde_json::Value;

use shuffle_twist::cli::run_with;
use shuffle_twist::homotopy::{homotopy_equivalent, parse_complex, resolve};
use shuffle_twist::path_algebra::{parse_algebra, sl2_principal};
use shuffle_twist::qmod::{parabolic_verma, parse_comp_table, write_module};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("shuffle-twist").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json", "--quiet"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    assert!(code == 0 || code == 1, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("shuffle-twist-{}-{name}", std::process::id()));
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn apply_shuffle_in_sl2() {
    let (code, out, _) = run(&["apply", "--functor", "shuffle:s1", "--object", "P:e", "--family", "sl2", "--reduce"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next().unwrap(), "{ [1] P(e) -> [0] P(s) }");
}

#[test]
fn series_reproduces_composition_table() {
    let (code, out, _) = run(&["series", "--family", "parabolic-sl:4"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().collect();
    assert!(rows.contains(&"P(s1)       | L(s1)       | L(e) L(s1*s2)     | L(s1)"));
    assert!(rows.contains(&"M(s1*s2*s3) | L(s1*s2*s3)"));
    let t = parse_comp_table(json(&["series", "--family", "parabolic-sl:4"])["table"].as_str().unwrap()).unwrap();
    let bundled = parse_comp_table(&std::fs::read_to_string(data("parabolic_sl4.table")).unwrap()).unwrap();
    assert_eq!(t.projectives, bundled.projectives);
    assert_eq!(t.vermas, bundled.vermas);
}

#[test]
fn verify_main_theorem_n3() {
    let (code, out, err) = run(&["verify", "main-theorem", "--n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("bimodule s1") && out.contains("bimodule s2"));
    assert!(out.ends_with("PASS: 8 checks, 0 failed\n"));
    assert!(err.lines().count() >= 8);
    let (_, _, quiet) = run(&["--quiet", "verify", "main-theorem", "--n", "3"]);
    assert!(quiet.is_empty());
}

#[test]
fn homdims_reports() {
    let (code, out, _) = run(&["homdims", &data("sl4_s2xs2.table")]);
    assert_eq!(code, 0);
    assert!(out.contains("End-dimension-2 candidates: {t, ts}"));
    assert!(out.contains("the stated lists disagree"));
    let v = json(&["homdims", &data("parabolic_sl4.table")]);
    assert_eq!(v["candidates"], serde_json::json!(["s1", "s1*s2", "s1*s2*s3"]));
    let single = temp_file("single.table", "block one\nM x : x@0\nP x : x@0\n");
    let v = json(&["homdims", single.to_str().unwrap()]);
    assert_eq!(v["candidates"], serde_json::json!([]));
    assert!(v["notes"].as_array().unwrap().iter().any(|n| n.as_str().unwrap().contains("not decidable")));
    let bad = temp_file("bad.table", "block b\nP x : y@0\n");
    assert_eq!(run(&["homdims", bad.to_str().unwrap()]).0, 2);
}

#[test]
fn check_exit_codes() {
    assert_eq!(run(&["check", "spherical", "--family", "sl2", "--object", "L:e", "--d", "2"]).0, 0);
    assert_eq!(run(&["check", "spherelike", "--family", "sl2", "--object", "M:s", "--d", "0"]).0, 1);
    assert_eq!(run(&["check", "configuration", "--family", "parabolic-sl:4"]).0, 0);
    let v = json(&["check", "spherelike", "--family", "parabolic-sl:3", "--object", "P:e", "--d", "0"]);
    assert_eq!(v["pass"], Value::Bool(false));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["algebra", "--family", "bogus"]).0, 2);
    assert_eq!(run(&["apply"]).0, 2);
    assert_eq!(run(&["verify", "main-theorem", "--n", "9"]).0, 2);
    assert_eq!(run(&["apply", "--family", "sl2", "--functor", "shuffle:s1", "--object", "Q:e"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "--quiet", "verify", "braid", "--n", "3"];
    let (c1, a, _) = run(&args);
    let (c2, b, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let args = ["--json", "apply", "--family", "parabolic-sl:3", "--functor", "twist:P:s1", "--object", "M:e"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn json_round_trips() {
    let v = json(&["algebra", "--family", "parabolic-sl:3"]);
    let a = parse_algebra(v["algebra"].as_str().unwrap()).unwrap();
    assert_eq!(a.dim() as u64, v["dim"].as_u64().unwrap());
    let a = Arc::new(sl2_principal().unwrap());
    let v = json(&["resolve", "--family", "sl2", "--object", "M:s"]);
    let (_, x) = parse_complex(v["complex"].as_str().unwrap(), &a).unwrap();
    let ms = resolve(&parabolic_verma(&a, 1).unwrap()).unwrap();
    assert!(homotopy_equivalent(&x, &ms, 0).is_some());
    let v = json(&["apply", "--family", "sl2", "--functor", "cotwist:L:e", "--object", "P:e", "--reduce"]);
    let (_, y) = parse_complex(v["complex"].as_str().unwrap(), &a).unwrap();
    assert_eq!(y.render_compact(), v["compact"].as_str().unwrap());
}

#[test]
fn module_and_algebra_files() {
    let a = Arc::new(sl2_principal().unwrap());
    let m = temp_file("ms.module", &write_module("Ms", &parabolic_verma(&a, 1).unwrap()));
    let alg = temp_file("sl2.algebra", &shuffle_twist::path_algebra::write_algebra(&a));
    let (code, out, err) = run(&["resolve", "--algebra", alg.to_str().unwrap(), "--module", m.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("term 1 : P(e)<1>") && out.contains("term 0 : P(s)"));
}
