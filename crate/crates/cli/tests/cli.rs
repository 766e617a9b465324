use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn quiver(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("quivers").join(format!("{}.toml", name))
}

fn klr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klr")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = klr(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn with_quiver<'a>(q: &'a str, args: &[&'a str]) -> Vec<String> {
    let mut v = vec!["--quiver".to_string(), q.to_string()];
    v.extend(args.iter().map(|s| s.to_string()));
    v
}

fn run_on(name: &str, args: &[&str]) -> Value {
    let q = quiver(name);
    let v = with_quiver(q.to_str().unwrap(), args);
    report(&v.iter().map(String::as_str).collect::<Vec<_>>())
}

#[test]
fn cartan_of_the_jordan_quiver() {
    let r = run_on("jordan", &["cartan"]);
    assert_eq!(r["schema"], "klr-report/1");
    assert!(r["conventions"]["word_syntax"].is_string());
    assert_eq!(r["results"][0]["value"], "[0]");
    assert_eq!(r["results"][1]["value"], "I0");
}

#[test]
fn cartan_of_the_mixed_quiver() {
    let r = run_on("jordan_plus_loopless", &["cartan"]);
    let values: Vec<&str> = r["results"].as_array().unwrap().iter().map(|x| x["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["[2, -1]", "I+", "[-1, 0]", "I0"]);
}

#[test]
fn jordan_characters_for_three_strands() {
    let r = run_on("jordan", &["characters", "--n", "3"]);
    let rows = r["results"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["value"], "(1) i[1] i[1] i[1] + (1) i[1] i[2] + (1) i[2] i[1] + (1) i[3]");
    assert_eq!(rows[1]["value"], "(2) i[1] i[1] i[1] + (1) i[1] i[2] + (1) i[2] i[1]");
    assert_eq!(rows[2]["value"], "(1) i[1] i[1] i[1]");
    assert_eq!(r["passed"], true);
}

#[test]
fn ef_check_passes() {
    assert_eq!(report(&["ef-check", "--a", "2", "--p", "4"])["passed"], true);
}

#[test]
fn checks_pass_on_small_inputs() {
    assert_eq!(run_on("loopless_a2", &["serre-check", "--i", "i", "--j", "j", "-D", "12"])["passed"], true);
    assert_eq!(run_on("disconnected", &["commute-check", "--i", "a", "--j", "d", "--m", "2"])["passed"], true);
    assert_eq!(run_on("loopless_a2", &["center-check", "--weight", "i,j"])["passed"], true);
    assert_eq!(run_on("two_loop", &["pairing", "-D", "12"])["passed"], true);
    assert_eq!(report(&["kostka", "--n", "4"])["passed"], true);
    assert_eq!(report(&["cyclo-dim", "--a", "2", "--n", "2"])["passed"], true);
    assert_eq!(report(&["mackey-check", "--n", "1", "--l", "1", "--t", "1", "-D", "8"])["passed"], true);
    assert_eq!(report(&["mackey-check", "--n", "1", "--l", "1", "--t", "1", "--a", "2"])["passed"], true);
}

#[test]
fn normal_form_and_dimensions() {
    let r = run_on("loopless_a2", &["normal-form", "--word", "e(i,j) x(1) t(1)"]);
    assert_eq!(r["results"][0]["value"], "x2*t1*e(i,j)");
    assert_eq!(r["results"][1]["value"], "3");
    let r = run_on("jordan", &["dim", "--target", "i,i", "-D", "4"]);
    let dims: Vec<&str> = r["results"].as_array().unwrap().iter().map(|x| x["value"].as_str().unwrap()).collect();
    assert_eq!(dims, ["2", "4", "6"]);
}

#[test]
fn csv_output() {
    let q = quiver("jordan");
    let out = klr(&["--quiver", q.to_str().unwrap(), "--format", "csv", "cartan"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "check,passed,value,witnesses\nrow i,true,[0],\nclass i,true,I0,\n");
}

#[test]
fn output_is_deterministic() {
    let q = quiver("jordan_plus_loopless");
    let args = ["--quiver", q.to_str().unwrap(), "--seed", "7", "pairing", "-D", "8"];
    assert_eq!(klr(&args).stdout, klr(&args).stdout);
}

#[test]
fn malformed_quiver_names_the_field() {
    let dir = std::env::temp_dir().join(format!("klr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (text, field) in [
        ("vertices = [\"i\"]\nloops = { i = \"x\" }\n", "loops"),
        ("vertices = [\"i\"]\narrows = [[\"i\", \"k\"]]\n", "arrows"),
    ] {
        let path = dir.join(format!("{}.toml", field));
        std::fs::write(&path, text).unwrap();
        let out = klr(&["--quiver", path.to_str().unwrap(), "cartan"]);
        assert!(!out.status.success());
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(&format!("`{}`", field)), "{}", err);
    }
}

#[test]
fn unknown_subcommand_and_missing_quiver_fail() {
    assert!(!klr(&["frobnicate"]).status.success());
    let out = klr(&["cartan"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--quiver"));
}

#[test]
fn cyclotomic_commands_reject_other_quivers() {
    let q = quiver("loopless_a2");
    assert!(!klr(&["--quiver", q.to_str().unwrap(), "cyclo-dim", "--a", "1", "--n", "1"]).status.success());
}
