use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn load(name: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

struct Run {
    code: i32,
    out: Value,
    err: String,
}

fn run(args: &[&str], stdin: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ruledmotion"))
        .args(args)
        .current_dir(data(""))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    let text = String::from_utf8(o.stdout).unwrap();
    Run {
        code: o.status.code().unwrap(),
        out: if text.trim().is_empty() { Value::Null } else { serde_json::from_str(&text).unwrap() },
        err: String::from_utf8(o.stderr).unwrap(),
    }
}

fn f(v: &Value) -> f64 {
    v.as_str().unwrap().parse().unwrap()
}

#[test]
fn analyze_reports_content_and_saturation() {
    let r = run(&["analyze", "-i", "k_line.json"], None);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out["kinematic"], json!(true));
    assert_eq!(r.out["saturated"], json!(true));
    assert_eq!(r.out["g"], json!("t^2-6t+10"));
    let r = run(&["analyze", "-i", "cylindroid_cubic.json"], None);
    assert_eq!((r.code, &r.out["kinematic"]), (0, &json!(false)));
    let r = run(&["analyze", "-i", "fixed_k.json"], None);
    assert_eq!(r.out["g"], json!("1"));
}

#[test]
fn synthesis_with_the_printed_primal_part() {
    let r = run(&["synthesize", "-i", "k_line.json", "--inject-q", "printed_q.json"], None);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out["motion"], load("c28.json")["motion"]);
    assert_eq!(r.out["h"], json!("t^2-6t+10"));
    assert_eq!(r.out["minimal"], json!(true));
    assert_eq!(r.out["unique"], json!(false));
}

#[test]
fn non_kinematic_surface_has_no_solution() {
    let r = run(&["synthesize", "-i", "cylindroid_cubic.json"], None);
    assert_eq!(r.code, 3);
    assert!(r.err.contains("not a square"));
}

#[test]
fn synthesized_motions_verify_through_a_pipe() {
    for input in ["k_line.json", "cylindroid.json", "fixed_k.json"] {
        let s = run(&["synthesize", "-i", input], None);
        assert_eq!(s.code, 0, "{input}: {}", s.err);
        let v = run(&["verify"], Some(&s.out.to_string()));
        assert_eq!(v.code, 0, "{input}: {}", v.err);
        assert_eq!(v.out["ok"], json!(true));
        assert_eq!(v.out["h"], s.out["h"]);
    }
}

#[test]
fn family_members_verify() {
    let s = run(&["synthesize", "-i", "k_line.json", "--nu", "2t-1/3", "--unit", "3,4"], None);
    assert_eq!(s.code, 0, "{}", s.err);
    assert_eq!(run(&["verify"], Some(&s.out.to_string())).code, 0);
    let s = run(&["synthesize", "-i", "k_line.json", "--nu", "t^3"], None);
    assert_eq!(s.code, 2, "{}", s.err);
}

#[test]
fn cylindroid_synthesis() {
    let r = run(&["synthesize", "-i", "cylindroid.json", "--inject-q", "cylindroid_q.json"], None);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out["h"], json!("t^4+2t^2+1"));
    assert_eq!(r.out["motion"]["primal"]["y"], json!(["0", "-1", "0", "-2", "0", "-1"]));
    assert_eq!(r.out["motion"]["dual"]["z"], json!(["0", "0", "-2", "0", "2"]));
}

#[test]
fn verify_reports_cofactor_or_residual() {
    let r = run(&["verify", "-i", "c_hat.json"], None);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out["h"], json!("t^4-6t^3+11t^2-6t+10"));
    let r = run(&["verify", "-i", "identity.json"], None);
    assert_eq!(r.code, 4);
    assert_eq!(r.out["ok"], json!(false));
    let r = run(&["verify", "-i", "c28.json", "--line", "k_line.json"], None);
    assert_eq!(r.code, 0, "{}", r.err);
}

#[test]
fn quadratic_factor_of_a_degree_five_motion() {
    let r = run(&["factor", "-i", "c_hat.json", "--order", "t^2+1"], None);
    assert_eq!(r.code, 0, "{}", r.err);
    let h = &r.out["factors"][0]["h"];
    assert_eq!(h["primal"], json!({"w": "0", "x": "0", "y": "0", "z": "1"}));
    assert_eq!(h["dual"], json!({"w": "0", "x": "0", "y": "0", "z": "0"}));
    // the quotient differs from the degree-four motion by a constant right factor
    let mut rest = json!({"motion": r.out["rest"].clone()});
    rest["line"] = load("k_line.json")["line"].clone();
    let v = run(&["verify"], Some(&rest.to_string()));
    assert_eq!(v.out["h"], json!("t^2-6t+10"));
}

#[test]
fn translation_factor() {
    let r = run(&["factor", "-i", "c_tilde.json", "--peel-translation", "t^2+1,1"], None);
    assert_eq!(r.code, 0, "{}", r.err);
    assert_eq!(r.out["translation_factor"]["primal"]["w"], json!(["1", "0", "1"]));
    assert_eq!(r.out["translation_factor"]["dual"]["z"], json!(["1"]));
    assert_eq!(r.out["rest"], load("c28.json")["motion"]);
}

#[test]
fn exact_factors_must_divide_the_norm() {
    let r = run(&["factor", "-i", "c28.json", "--order", "t^2+1", "--order", "t^2-6t+10"], None);
    assert_eq!(r.code, 5, "{}", r.err);
    let r = run(&["factor", "-i", "c28.json"], None);
    assert_eq!(r.code, 1);
}

#[test]
fn interpolation_and_both_factorizations() {
    let dir = tempfile::tempdir().unwrap();
    let mesh = dir.path().join("bennett.obj");
    let r = run(&["interpolate", "-i", "bennett_lines.json", "--mesh", mesh.to_str().unwrap(), "--samples", "16"], None);
    assert_eq!(r.code, 0, "{}", r.err);
    let p0 = &r.out["preimages"][0];
    for (k, want) in [("x", -0.3000113351), ("y", 0.09904575183), ("z", 0.9487798153)] {
        assert!((f(&p0[k]) - want).abs() < 1e-8);
    }
    assert!(r.out["residuals"]["factorization_a"].as_f64().unwrap() < 1e-9);
    let obj = std::fs::read_to_string(&mesh).unwrap();
    // rulings leaving the clipping box break the strip
    let quads = obj.lines().filter(|l| l.starts_with("f ")).count();
    assert!(quads > 0 && quads <= 15);
    assert!(obj.lines().any(|l| l.starts_with("l ")));

    let motion = json!({"motion": r.out["motion"].clone()});
    let fac = run(&["factor"], Some(&motion.to_string()));
    assert_eq!(fac.code, 0, "{}", fac.err);
    let both = fac.out["factorizations"].as_array().unwrap();
    assert_eq!(both.len(), 2);
    for fz in both {
        assert!(fz["residual"].as_f64().unwrap() < 1e-9);
    }
    let h1 = &both[0]["factors"][0]["h"]["primal"];
    assert!((f(&h1["w"]) - 3.437729498).abs() < 1e-6);
}

#[test]
fn interpolation_of_perturbed_lines() {
    let mut doc = load("bennett_lines.json");
    for (i, line) in doc["lines"].as_array_mut().unwrap().iter_mut().enumerate() {
        let d: Vec<f64> = line["direction"].as_array().unwrap().iter().map(f).collect();
        let m: Vec<f64> = line["moment"].as_array().unwrap().iter().map(f).collect();
        let shift = [1e-3 * (i as f64 + 1.0), -1e-3, 5e-4];
        // translate the line, which keeps its Plücker condition
        let dm = [shift[1] * d[2] - shift[2] * d[1], shift[2] * d[0] - shift[0] * d[2], shift[0] * d[1] - shift[1] * d[0]];
        line["moment"] = json!((0..3).map(|k| format!("{:?}", m[k] + dm[k])).collect::<Vec<_>>());
    }
    let r = run(&["interpolate"], Some(&doc.to_string()));
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out["residuals"]["knots"].as_array().unwrap().iter().all(|x| x.as_f64().unwrap() < 1e-8));
}

#[test]
fn identical_lines_are_degenerate() {
    let mut doc = load("bennett_lines.json");
    let first = doc["lines"][0].clone();
    doc["lines"] = json!([first.clone(), first.clone(), first]);
    let r = run(&["interpolate"], Some(&doc.to_string()));
    assert_eq!(r.code, 6);
    assert!(r.err.contains("coincide"));
}

#[test]
fn malformed_and_invalid_input() {
    assert_eq!(run(&["analyze"], Some("{not json")).code, 1);
    let mixed = json!({"line": {"primal": {"x": ["1/2"], "y": ["0.5"], "z": []}}});
    assert_eq!(run(&["analyze"], Some(&mixed.to_string())).code, 1);
    let plucker = json!({"line": {"primal": {"x": ["1"], "y": [], "z": []}, "dual": {"x": ["1"], "y": [], "z": []}}});
    assert_eq!(run(&["analyze"], Some(&plucker.to_string())).code, 2);
    assert_eq!(run(&["analyze", "--no-such-flag"], None).code, 1);
    assert_eq!(run(&["synthesize", "-i", "bennett_lines.json"], None).code, 1);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let r = run(&["analyze", "-i", "k_line.json", "-o", out.to_str().unwrap()], None);
    assert_eq!(r.code, 0);
    assert_eq!(r.out, Value::Null);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(doc["mode"], json!("exact"));
}
