use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpoisson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gpoisson-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn rgt_of_a_catalog_entry() {
    let out = run(&["rgt", "--catalog", "cubic_x2y"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rgt"]["rgt"], -3);
    assert_eq!(v["config"]["command"], "rgt");
    assert_eq!(v["config"]["input"]["catalog"], "cubic_x2y");
    assert_eq!(v["config"]["max_degree"], 6);
}

#[test]
fn modular_of_rank_one() {
    let out = run(&["modular", "--catalog", "rank1", "--param", "n=2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        v["modular"]["modular"]["images"],
        serde_json::json!(["0", "2*x"])
    );
    assert_eq!(v["modular"]["divergence"], "0");
    assert_eq!(v["config"]["input"]["params"]["n"], "2");
}

#[test]
fn verify_reports_jacobi_and_grading() {
    let doc = scratch(
        "linear.json",
        r#"{"arity": 3, "brackets": {"1,2": "x2", "1,3": "x3"}}"#,
    );
    let out = run(&["verify", "--input", doc.to_str().unwrap()]);
    let v = json(&out);
    assert_eq!(v["verify"]["jacobi"], true);
    // The brackets have degree 1, not 2, under weights (1,1,1).
    assert_eq!(v["verify"]["graded"], false);
    assert_eq!(out.status.code(), Some(1));

    let bad = scratch(
        "bad.json",
        r#"{"arity": 3, "brackets": {"1,2": "y^2", "2,3": "x^2"}}"#,
    );
    let out = run(&["verify", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["verify"]["jacobi"], false);
    assert_eq!(
        v["verify"]["jacobi_failure"]["triple"],
        serde_json::json!([1, 2, 3])
    );
}

#[test]
fn non_poisson_input_fails_with_code_one() {
    let bad = scratch(
        "bad2.json",
        r#"{"arity": 3, "brackets": {"1,2": "y^2", "2,3": "x^2"}}"#,
    );
    let out = run(&["rgt", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["error"].as_str().unwrap().contains("Jacobi"));
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(run(&["rgt", "--catalog", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["rgt"]).status.code(), Some(2));
    assert_eq!(
        run(&["rgt", "--catalog", "hesse", "--param", "mu=1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["rgt", "--catalog", "hesse", "--max-degree", "25"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    let broken = scratch("broken.json", r#"{"arity": 2, "brackets": {"1,2": "x +"}}"#);
    assert_eq!(
        run(&["verify", "--input", broken.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let out = run(&["derivations", "--catalog", "weyl_twist"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("positive"));
}

#[test]
fn twist_with_named_and_file_derivations() {
    let out = run(&["twist", "--catalog", "ex2_6", "--derivation-name", "f"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["twist"]["structure"]["brackets"]["1,2"], "0");

    let delta = scratch("phi.json", r#"{"degree": 0, "images": ["-x", "y - x"]}"#);
    let out = run(&[
        "twist",
        "--catalog",
        "ex2_6",
        "--derivation",
        delta.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["twist"]["structure"]["brackets"]["1,2"], "2*x*y");
    assert_eq!(v["twist"]["poisson_derivation"], false);

    let not_semi = scratch("x.json", r#"{"images": ["y", "0"]}"#);
    let out = run(&[
        "twist",
        "--catalog",
        "cubic_x3",
        "--derivation",
        not_semi.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2), "wrong arity is an input error");
    let not_semi = scratch("y.json", r#"{"images": ["y", "0", "0"]}"#);
    let out = run(&[
        "twist",
        "--catalog",
        "cubic_x3",
        "--derivation",
        not_semi.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cohomology_window() {
    let out = run(&[
        "cohomology",
        "--catalog",
        "cubic_x3_y2z",
        "--max-degree",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let ph = &v["cohomology"]["PH"];
    assert_eq!(ph["3"]["-3"], 1);
    assert_eq!(ph["2"]["0"], 2);
    assert_eq!(ph["1"]["3"], 1);
    assert_eq!(v["cohomology"]["window"], serde_json::json!([-3, 3]));
    assert_eq!(v["cohomology"]["checks"]["poincare"]["0"], true);
}

#[test]
fn derivations_and_center() {
    let out = run(&["derivations", "--catalog", "hesse", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["config"]["central"][0], "1/3*x^3 + 1/3*y^3 + 1/3*z^3");
    assert_eq!(v["derivations"]["verdicts"]["all"]["h_ozone"], true);
    let out = run(&["center", "--catalog", "hesse", "--max-degree", "3"]);
    let v = json(&out);
    assert_eq!(v["center"]["3"]["dim"], 1);
    assert_eq!(v["center"]["2"]["dim"], 0);
}

#[test]
fn report_matches_expectations_for_every_entry() {
    let out = run(&["catalog"]);
    let names: Vec<String> = json(&out)["catalog"]
        .as_object()
        .unwrap()
        .keys()
        .cloned()
        .collect();
    assert!(names.len() >= 15);
    for name in names {
        let out = run(&["report", "--catalog", &name, "--max-degree", "3"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let v = json(&out);
        for (k, check) in v["expected"].as_object().unwrap() {
            assert_eq!(check["match"], true, "{name}: {k}");
        }
    }
}

#[test]
fn reports_are_byte_stable() {
    let a = run(&["report", "--catalog", "cubic_xyz", "--max-degree", "2"]);
    let b = run(&["report", "--catalog", "cubic_xyz", "--max-degree", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn table_format_and_out_file() {
    let out = run(&["rgt", "--catalog", "cubic_x3", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["rgt.rgt", "-5"]));
    let target = std::env::temp_dir().join(format!("gpoisson-out-{}.json", std::process::id()));
    let out = run(&[
        "rgt",
        "--catalog",
        "cubic_x3",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(v["rgt"]["rgt"], -5);
}

#[test]
fn catalog_show() {
    let out = run(&["catalog", "sextic_weighted", "--param", "lambda=1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(
        v["catalog"]["structure"]["weights"],
        serde_json::json!([1, 2, 3])
    );
    assert_eq!(v["catalog"]["expected"]["rgt"], 0);
    assert_eq!(v["catalog"]["flags"]["lambda6_equals_216"], false);
}
