use std::path::PathBuf;
use std::process::{Command, Output};

use rees_core::detideal::GradeProfile;
use rees_core::gradecalc::GradeValue;
use rees_core::theorems::{TheoremReport, Verdict};
use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rees-check"))
        .args(args)
        .env_remove("REES_CHECK_SEED")
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let json = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    });
    (out.status.code().unwrap(), json)
}

fn write_spec(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn check_thm1_generic() {
    let input = data("generic23.json");
    let out = run(&["check-thm1", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("theorem 1.1: EQUIV_BOTH_TRUE"), "{text}");
}

#[test]
fn check_thm2_not_linear_type() {
    let input = data("notlineartype.json");
    let (code, json) = run_json(&["check-thm2", "--input", input.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let report: TheoremReport = serde_json::from_value(json["report"].clone()).unwrap();
    assert_eq!(report.verdict, Verdict::EquivBothFalse);
    let failing: Vec<&str> = report.failing().iter().map(|c| c.label.as_str()).collect();
    assert_eq!(failing, vec!["grade I_1(M) >= 3", "Rees kernel = (f_1..f_m)S"]);
}

#[test]
fn resolve_power_generic() {
    let input = data("generic23.json");
    let (code, json) = run_json(&["resolve-power", "--input", input.to_str().unwrap(), "--r", "1", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json["complex"]["ranks"], serde_json::json!([3, 2]));
    assert_eq!(json["certificate"]["pass"], true);
    assert_eq!(
        json["complex"]["maps"][0]["entries"],
        serde_json::json!([["a", "d"], ["b", "e"], ["c", "f"]])
    );
}

#[test]
fn grade_profile_round_trip() {
    let input = data("generic23.json");
    let (code, json) = run_json(&["grade-profile", "--input", input.to_str().unwrap(), "--json", "--jobs", "2"]);
    assert_eq!(code, 0);
    let profile: GradeProfile = serde_json::from_value(json["profile"].clone()).unwrap();
    assert_eq!(profile.0, vec![(1, GradeValue::Finite(6)), (2, GradeValue::Finite(2))]);
}

#[test]
fn json_output_is_deterministic_and_mirrored_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.json");
    let input = data("notlineartype.json");
    let args = ["koszul-strand", "--input", input.to_str().unwrap(), "--degree", "2", "--json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", out_path.to_str().unwrap()]);
    let third = run(&with_out);
    assert_eq!(third.stdout, std::fs::read(&out_path).unwrap());
}

#[test]
fn rees_ideal_of_row() {
    let input = data("row.json");
    let (code, json) = run_json(&["rees-ideal", "--input", input.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json["groebner_basis"], serde_json::json!(["x*T1 + y*T2"]));
    assert_eq!(json["equals_symmetric"], true);
}

#[test]
fn gb_command() {
    let (code, json) = run_json(&[
        "gb", "--gens", "x^2-y,x^3-x", "--vars", "x,y", "--order", "lex", "--json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json["groebner_basis"], serde_json::json!(["y^2 - y", "x*y - x", "x^2 - y"]));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let ragged = write_spec(&dir, "ragged.json", r#"{"characteristic":5,"vars":["x"],"matrix":[["x","1"],["x"]]}"#);
    let out = run(&["grade-profile", "--input", &ragged]);
    assert_eq!(out.status.code(), Some(2));

    let tall = write_spec(&dir, "tall.json", r#"{"characteristic":5,"vars":["x"],"matrix":[["x"],["x"]]}"#);
    let out = run(&["check-thm1", "--input", &tall]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("m <= n"));

    let square = write_spec(&dir, "square.json", r#"{"characteristic":5,"vars":["x","y"],"matrix":[["x","y"],["y","x"]]}"#);
    assert_eq!(run(&["check-thm2", "--input", &square]).status.code(), Some(2));
    assert_eq!(run(&["rees-ideal", "--input", &square]).status.code(), Some(2));

    let extra = write_spec(&dir, "extra.json", r#"{"characteristic":5,"vars":["x"],"matrix":[["x"]],"color":1}"#);
    assert_eq!(run(&["grade-profile", "--input", &extra]).status.code(), Some(2));

    assert_eq!(run(&["grade-profile", "--input", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn degenerate_inputs() {
    let input = data("degenerate.json");
    let (code, json) = run_json(&["check-thm1", "--input", input.to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json["report"]["verdict"], "EQUIV_BOTH_FALSE");
    let dir = tempfile::tempdir().unwrap();
    let unit = write_spec(&dir, "unit.json", r#"{"characteristic":32003,"vars":["x"],"matrix":[["1"]]}"#);
    let (code, json) = run_json(&["grade-profile", "--input", &unit, "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json["profile"], serde_json::json!([[1, "INFINITY"]]));
}

#[test]
fn timeout_exits_3_with_partial_report() {
    let gens = "a+b+c+d+e+f,a*b+b*c+c*d+d*e+e*f+f*a,a*b*c+b*c*d+c*d*e+d*e*f+e*f*a+f*a*b,\
                a*b*c*d+b*c*d*e+c*d*e*f+d*e*f*a+e*f*a*b+f*a*b*c,\
                a*b*c*d*e+b*c*d*e*f+c*d*e*f*a+d*e*f*a*b+e*f*a*b*c+f*a*b*c*d,a*b*c*d*e*f-1";
    let out = run(&[
        "gb", "--order", "lex", "--vars", "a,b,c,d,e,f", "--gens", gens, "--timeout", "0.5", "--json",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let json: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["status"], "timeout");
}

#[test]
fn selftest_with_seed() {
    let out = Command::new(env!("CARGO_BIN_EXE_rees-check"))
        .args(["selftest", "--count", "20"])
        .env("REES_CHECK_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("seed 5: 20 matrices"), "{text}");
    assert!(text.contains("selftest: PASS"));
}
