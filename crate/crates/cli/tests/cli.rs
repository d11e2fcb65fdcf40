use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn symdef(args: &[&str]) -> Output {
    symdef_env(args, &[])
}

fn symdef_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_symdef"));
    cmd.args(args).env_remove("SYMDEF_MAX_GENS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn net_graph() -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", "net.json"].iter().collect();
    p.display().to_string()
}

fn temp_graph(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn column(report: &Value, method: &str, key: &str) -> Vec<Value> {
    report["results"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["method"] == method)
        .map(|r| r[key].clone())
        .collect()
}

#[test]
fn report_schema() {
    let out = symdef(&["cover-ideal", "--family", "K3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["command", "input", "results", "warnings", "timing_ms"]);
    assert_eq!(v["command"], "cover-ideal");
    assert!(v["timing_ms"].is_u64());
    let row = &v["results"][0];
    assert_eq!(row["mu"], 3);
    assert_eq!(row["alpha"], 2);
    assert_eq!(row["generators"], serde_json::json!(["x1*x2", "x1*x3", "x2*x3"]));
}

#[test]
fn triangle_defects_agree_across_methods() {
    let out = symdef(&["sdefect", "--family", "K3", "--m", "1..6", "--method", "all"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let expected: Vec<Value> = [0, 1, 3, 4, 6, 7].map(Value::from).to_vec();
    for method in ["brute", "recursion", "cycle_recursion", "closed_form"] {
        assert_eq!(column(&v, method, "sdefect"), expected, "{method}");
    }
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["agrees"] == true));
    assert_eq!(v["warnings"], serde_json::json!([]));
}

#[test]
fn bipartite_defects_vanish() {
    let out = symdef(&["sdefect", "--family", "C4", "--m", "1..5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(column(&json(&out), "brute", "sdefect"), vec![Value::from(0); 5]);
}

#[test]
fn net_graph_formula_overcounts() {
    let out = symdef(&["sdefect", "--graph", &net_graph(), "--m", "3", "--method", "all"]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    let brute = column(&v, "brute", "sdefect")[0].as_u64().unwrap();
    let formula = column(&v, "recursion", "sdefect")[0].as_u64().unwrap();
    assert!(formula > brute, "formula {formula} brute {brute}");
    assert_eq!(column(&v, "recursion", "agrees"), vec![Value::Bool(false)]);
    let hyp = column(&v, "recursion", "hypotheses")[0][0].as_str().unwrap().to_string();
    assert!(hyp.starts_with("unverified"), "{hyp}");
    assert!(v["warnings"][0].as_str().unwrap().contains("brute force"));

    let refused = symdef(&["sdefect", "--graph", &net_graph(), "--m", "3", "--method", "recursive"]);
    assert_eq!(code(&refused), 4);
}

#[test]
fn verify_complete_graphs() {
    let out = symdef(&["verify", "kn", "--n", "3..5", "--m", "2..8"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let rows = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), 21);
    assert!(rows.iter().all(|r| r["pass"] == true));
}

#[test]
fn verify_triangle_tail_names_convention() {
    let out = symdef(&["verify", "triangle-tail", "--n", "5..7"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let rows = v["results"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["pass"] == true && r["convention"] == "edge_count"));
}

#[test]
fn verify_failure_exits_two() {
    let out = symdef(&["verify", "cycle", "--n", "9", "--m", "5"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["results"][0]["pass"], false);
}

#[test]
fn fit_five_cycle() {
    let out = symdef(&["fit", "--family", "C5", "--m", "1..12", "--period", "2"]);
    assert_eq!(code(&out), 0);
    let row = &json(&out)["results"][0];
    assert_eq!(row["degree"], 2);
    assert_eq!(row["period"], 2);
    assert_eq!(row["values"].as_array().unwrap()[..4], [0, 1, 5, 11].map(Value::from));
}

#[test]
fn fit_explicit_values() {
    let out = symdef(&["fit", "--values", "0,1,3,4,6,7", "--start", "1"]);
    assert_eq!(code(&out), 0);
    let row = &json(&out)["results"][0];
    assert_eq!(row["degree"], 1);
    assert_eq!(row["polynomials"], serde_json::json!(["3/2*m - 2", "3/2*m - 3/2"]));

    assert_eq!(code(&symdef(&["fit", "--values", "1,2"])), 4);
}

#[test]
fn edgeless_graph_warns() {
    let f = temp_graph(r#"{"n": 3, "edges": []}"#);
    let out = symdef(&["cover-ideal", "--graph", f.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["results"][0]["generators"], serde_json::json!(["1"]));
    assert!(v["warnings"][0].as_str().unwrap().contains("unit ideal"));
}

#[test]
fn waldschmidt_of_triangle() {
    let out = symdef(&["waldschmidt", "--family", "K3"]);
    assert_eq!(code(&out), 0);
    let row = &json(&out)["results"][0];
    assert_eq!(row["value"], "3/2");
    assert_eq!(row["resurgence_lower_bound"], "4/3");
}

#[test]
fn classify_and_degree() {
    let out = symdef(&["classify2", "--family", "T3"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["agrees"] == true));

    let out = symdef(&["degree", "--family", "C5", "--m-max", "10"]);
    assert_eq!(code(&out), 0);
    let row = &json(&out)["results"][0];
    assert_eq!(row["degree"], 2);
    assert_eq!(row["quotient_jacobian_full_rank"], true);
}

#[test]
fn input_errors_exit_four() {
    let bad = temp_graph(r#"{"n": 2, "edges": [[0, 1]]}"#);
    let cases: Vec<Vec<&str>> = vec![
        vec!["sdefect", "--family", "X3", "--m", "1"],
        vec!["sdefect", "--family", "K3", "--m", "0"],
        vec!["sdefect", "--family", "K3", "--m", "3..1"],
        vec!["sdefect", "--m", "1"],
        vec!["sdefect", "--family", "K3", "--graph", "g.json", "--m", "1"],
        vec!["sdefect", "--graph", "/definitely/missing.json", "--m", "1"],
        vec!["sdefect", "--graph", bad.path().to_str().unwrap(), "--m", "1"],
        vec!["sdefect", "--family", "C4", "--m", "1", "--method", "cycle"],
        vec!["verify", "nonsense"],
        vec!["verify", "kn", "--family", "K3"],
    ];
    for args in cases {
        let out = symdef(&args);
        assert_eq!(code(&out), 4, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn resource_cap_exits_three() {
    assert_eq!(code(&symdef(&["sdefect", "--family", "K3", "--m", "13"])), 3);
    assert_eq!(code(&symdef(&["sdefect", "--family", "C9", "--m", "6", "--max-gens", "100"])), 3);
}

#[test]
fn flag_beats_environment_for_generator_cap() {
    let args = ["sdefect", "--family", "C7", "--m", "4", "--no-timing"];
    assert_eq!(code(&symdef_env(&args, &[("SYMDEF_MAX_GENS", "10")])), 3);

    let mut with_flag = args.to_vec();
    with_flag.extend(["--max-gens", "5000"]);
    let out = symdef_env(&with_flag, &[("SYMDEF_MAX_GENS", "10")]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["input"]["max_gens"], 5000);

    let out = symdef_env(&args, &[("SYMDEF_MAX_GENS", "5000")]);
    assert_eq!(json(&out)["input"]["max_gens"], 5000);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["degree", "--family", "C5", "--m-max", "8", "--no-timing", "--seed", "7"];
    let a = symdef(&args);
    let b = symdef(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(json(&a)["timing_ms"].is_null());
    assert_eq!(json(&a)["input"]["seed"], 7);
}

#[test]
fn tsv_has_header_row() {
    let out = symdef(&["sdefect", "--family", "K4", "--m", "2..3", "--format", "tsv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m\tmethod\tsdefect\twitnesses\thypotheses");
    assert_eq!(lines[1], "2\tbrute\t1\t1\t");
    assert_eq!(lines[2], "3\tbrute\t4\t4\t");
}

#[test]
fn help_exits_zero() {
    let out = symdef(&["--help"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("sdefect"));
}
