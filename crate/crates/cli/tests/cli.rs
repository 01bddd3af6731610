use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use toriclogk::rational::parse_rat;
use toriclogk::{builtins, PolytopeFile};

fn toriclogk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toriclogk"))
        .args(args)
        .env("TORICLOGK_COLOR", "never")
        .output()
        .expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = toriclogk(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stderr.is_empty());
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_of(args: &[&str]) -> (i32, Value) {
    let out = toriclogk(args);
    assert!(out.stdout.is_empty());
    let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    (out.status.code().unwrap(), err)
}

fn write_polytope(dir: &Path, name: &str) -> String {
    let path = dir.join(format!("{name}.json"));
    let p = builtins::by_name(name).unwrap();
    std::fs::write(&path, PolytopeFile::from_polytope(name, &p).to_json()).unwrap();
    path.to_str().unwrap().to_string()
}

/// Every string leaf that looks numeric must parse as an exact rational.
fn assert_rational_leaves(v: &Value) {
    match v {
        Value::String(s) if s.starts_with(|c: char| c == '-' || c.is_ascii_digit()) => {
            assert!(parse_rat(s).is_ok(), "{s} is not a rational");
        }
        Value::Array(a) => a.iter().for_each(assert_rational_leaves),
        Value::Object(m) => m.values().for_each(assert_rational_leaves),
        _ => {}
    }
}

#[test]
fn classify_bl2p2_file_at_r() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_polytope(dir.path(), "bl2p2");
    let v = json_ok(&["classify", "--input", &file, "--beta", "21/25"]);
    assert_eq!(v["verdict"], "semistable");
    assert_eq!(v["witness"], serde_json::json!([1, 1]));
    assert_eq!(v["R"], "21/25");
    assert_rational_leaves(&v);
}

#[test]
fn classify_unstable_and_stable() {
    let v = json_ok(&["classify", "--builtin", "bl2p2", "--beta", "9/10"]);
    assert_eq!(v["verdict"], "unstable");
    assert_eq!(v["witness"], serde_json::json!([1, 1]));
    let v = json_ok(&["classify", "--builtin", "bl2p2", "--beta", "1/2"]);
    assert_eq!(v["verdict"], "stable");
    assert_eq!(v["witness"], Value::Null);
}

#[test]
fn r_of_p2_is_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_polytope(dir.path(), "p2");
    assert_eq!(json_ok(&["r", "--input", &file])["R"], "1");
    let v = json_ok(&["r", "--builtin", "bl1p2"]);
    assert_eq!(v["R"], "6/7");
    assert_eq!(v["q"], serde_json::json!(["-1/2", "-1/2"]));
}

#[test]
fn oracle_on_bl1p2() {
    let v = json_ok(&["oracle", "--builtin", "bl1p2", "--lambda", "-1,-1", "--kmax", "6"]);
    assert_eq!(v["coefficients"]["a0"], "2/3");
    assert_eq!(v["coefficients"]["b0"], "4");
    assert_eq!(v["checks"]["a0~ = (n+1) a0 + W b0"], "OK");
    assert!(v["checks"].as_object().unwrap().values().all(|c| c == "OK"));
    assert_eq!(v["samples"].as_array().unwrap().len(), 6);
    assert_rational_leaves(&v);
}

#[test]
fn futaki_report() {
    let v = json_ok(&["futaki", "--builtin", "bl2p2", "--lambda", "-1,2", "--beta", "1/2"]);
    assert_eq!(v["W"], "3");
    assert_eq!(v["critical_beta"], "63/65");
    // (1/3) beta - (21/2)(1 - beta) at beta = 1/2
    assert_eq!(v["log_futaki"]["value"], "-61/12");
    assert_eq!(v["one_parameter_subgroup"], true);
    let v = json_ok(&["futaki", "--builtin", "bl2p2", "--lambda", "1/2,1"]);
    assert_eq!(v["one_parameter_subgroup"], false);
}

#[test]
fn sweep_report() {
    let v = json_ok(&["sweep", "--builtin", "bl1p2"]);
    assert_eq!(v["R"], "6/7");
    let crit: Vec<&Value> = v["per_facet"].as_array().unwrap().iter().map(|f| &f["critical_beta"]).collect();
    assert!(crit.contains(&&Value::String("6/7".into())));
}

#[test]
fn p1conic_report() {
    let v = json_ok(&["p1conic", "--alphas", "1/2,1/2,1/2"]);
    assert_eq!(v["exists"], true);
    assert_eq!(v["mean_scalar"], "1/2");
    assert_eq!(v["futaki_values"], serde_json::json!(["1/2", "1/2", "1/2"]));
}

#[test]
fn check_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for name in builtins::NAMES {
        let file = write_polytope(dir.path(), name);
        let out = toriclogk(&["check", "--input", &file]);
        assert_eq!(out.status.code(), Some(0));
        let reparsed = PolytopeFile::parse(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
        assert_eq!(reparsed.to_polytope().unwrap(), builtins::by_name(name).unwrap());
    }
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("r.json");
    let out = toriclogk(&["r", "--builtin", "bl2p2", "-o", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(v["R"], "21/25");
}

#[test]
fn domain_errors_exit_two() {
    let (code, e) = error_of(&["classify", "--builtin", "bl2p2", "--beta", "1"]);
    assert_eq!((code, e["error"].as_str()), (2, Some("BetaOutOfRange")));
    let (code, e) = error_of(&["futaki", "--builtin", "p2", "--lambda", "0,0"]);
    assert_eq!((code, e["error"].as_str()), (2, Some("ZeroDirection")));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fat.json");
    std::fs::write(&path, r#"{"name":"fat","dim":2,"vertices":[[-2,-2],[2,-2],[2,2],[-2,2]]}"#).unwrap();
    let (code, e) = error_of(&["r", "--input", path.to_str().unwrap()]);
    assert_eq!((code, e["error"].as_str()), (2, Some("NotReflexive")));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "--builtin", "bl2p2"][..],
        &["r"],
        &["r", "--builtin", "dp6"],
        &["futaki", "--builtin", "p2"],
        &["classify", "--builtin", "p2", "--beta", "0.5"],
        &["frobnicate"],
    ] {
        let (code, e) = error_of(args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(e["error"], "Usage", "{args:?}");
    }
}

#[test]
fn io_errors_exit_one() {
    let (code, e) = error_of(&["r", "--input", "/definitely/not/here.json"]);
    assert_eq!((code, e["error"].as_str()), (1, Some("Io")));
}

#[test]
fn color_variable() {
    let run = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_toriclogk"))
            .args(["classify", "--builtin", "bl2p2", "--beta", "9/10", "--format", "text"])
            .env("TORICLOGK_COLOR", value)
            .output()
            .unwrap()
    };
    let never = run("never");
    assert_eq!(never.status.code(), Some(0));
    assert!(!String::from_utf8(never.stdout).unwrap().contains('\x1b'));
    // stdout is a pipe here, so auto stays plain
    let auto = run("auto");
    assert!(!String::from_utf8(auto.stdout).unwrap().contains('\x1b'));
    assert_eq!(run("always").status.code(), Some(2));
}

#[test]
fn plot_examples() {
    let out = toriclogk(&["plot", "--builtin", "bl2p2", "--beta", "21/25"]);
    assert_eq!(out.status.code(), Some(0));
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.contains(r#"id="Qbeta""#));
    assert!(svg.contains(r#"data-exact="1/2,1/2""#));
    assert!(svg.trim_end().ends_with("</svg>"));

    let svg = String::from_utf8(toriclogk(&["plot", "--builtin", "bl1p2"]).stdout).unwrap();
    assert!(svg.contains(r#"data-exact="1/12,1/12""#));
    assert!(svg.contains(r#"data-exact="-1/2,-1/2""#));
}

#[test]
fn plot_rejects_three_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("prism.json");
    std::fs::write(
        &path,
        PolytopeFile::from_polytope("prism", &builtins::bl1p2_x_p1()).to_json(),
    )
    .unwrap();
    let (code, e) = error_of(&["plot", "--input", path.to_str().unwrap()]);
    assert_eq!((code, e["error"].as_str()), (2, Some("UnsupportedDimension")));
}

#[test]
fn text_reports() {
    let out = toriclogk(&["sweep", "--builtin", "bl2p2", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("R = 21/25\n"));
    let out = toriclogk(&["oracle", "--builtin", "bl1p2", "--lambda", "-1,-1", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
}

#[test]
fn repeated_runs_identical() {
    for args in [
        &["check", "--builtin", "bl2p2"][..],
        &["oracle", "--builtin", "bl2p2", "--lambda", "1,1"],
        &["plot", "--builtin", "bl1p2", "--beta", "1/2"],
    ] {
        assert_eq!(toriclogk(args).stdout, toriclogk(args).stdout, "{args:?}");
    }
}
