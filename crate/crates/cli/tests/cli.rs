use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigenlogic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn structured(args: &[&str]) -> Value {
    let mut full = vec!["--output", "structured"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn table_command() {
    let text = stdout(&["table", "x | y"]);
    assert!(text.contains("f_14"));
    assert!(text.contains("0111"));
    let rows: Vec<&str> = text.lines().skip(1).take(4).collect();
    assert_eq!(rows, ["0 0 | 0", "0 1 | 1", "1 0 | 1", "1 1 | 1"]);
    let t = stdout(&["table", "T"]);
    assert_eq!(t.lines().nth(1), Some("| 1"));
    assert_eq!(code(&["table", "x &"]), 2);
}

#[test]
fn poly_command() {
    assert_eq!(stdout(&["poly", "x ^ y"]), "x + y - 2*x*y");
    assert_eq!(
        stdout(&["poly", "--canonical", "x ^ y"]),
        "(1-x)*y + x*(1-y)"
    );
    assert_eq!(stdout(&["poly", "maj(x,y,z)"]), "x*y + x*z + y*z - 2*x*y*z");
}

#[test]
fn observable_command() {
    assert_eq!(stdout(&["observable", "x -> y"]), "diag(1,1,0,1)");
    assert_eq!(
        stdout(&["--vars", "x,y", "observable", "F"]),
        "diag(0,0,0,0)"
    );
    let dense = stdout(&["observable", "--dense", "x & y & z"]);
    let cells: Vec<Vec<i64>> = dense
        .lines()
        .map(|l| l.split_whitespace().map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(cells.len(), 8);
    for (i, row) in cells.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            assert_eq!(c, i64::from(i == 7 && j == 7));
        }
    }
    assert_eq!(
        code(&["--dense-cap", "2", "observable", "--dense", "x & y & z"]),
        3
    );
    assert_eq!(code(&["--arity-cap", "2", "table", "x & y & z"]), 3);
}

#[test]
fn eval_and_expect() {
    assert_eq!(stdout(&["eval", "x -> y", "10"]), "0");
    assert_eq!(stdout(&["eval", "maj(x,y,z)", "110"]), "1");
    assert_eq!(stdout(&["expect", "x ^ y", "uniform"]), "0.5");
    assert_eq!(stdout(&["expect", "x & y", "0 0 0 (0,2)"]), "1");
    assert_eq!(
        stdout(&["expect", "x | y", "1 2 3,1 (0,4)"]),
        "0.967741935484"
    );
    assert_eq!(code(&["eval", "x -> y", "1"]), 3);
    assert_eq!(code(&["expect", "x", "0 0"]), 3);
    assert_eq!(code(&["eval", "x ->", "1"]), 2);
}

#[test]
fn index_command() {
    assert_eq!(stdout(&["index", "0111"]), "f_14");
    assert_eq!(stdout(&["index", "--arity", "2", "6"]), "0110");
    assert_eq!(code(&["index", "--arity", "1", "4"]), 3);
    assert_eq!(code(&["index", "011"]), 3);
}

#[test]
fn verify_command() {
    for (n, count) in [(1, "4"), (2, "16"), (3, "256")] {
        let text = stdout(&["verify", "--arity", &n.to_string()]);
        assert!(
            text.starts_with(&format!("arity {n}: {count} observables")),
            "{text}"
        );
        assert!(!text.contains("FAIL"));
    }
    assert_eq!(
        structured(&["verify", "--arity", "2"])["passed"],
        Value::Bool(true)
    );
    assert_eq!(code(&["verify", "--arity", "5"]), 3);
}

#[test]
fn formula_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eigenlogic"))
        .args(["poly", "--canonical"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"x & y\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "x*y");
}

#[test]
fn structured_matches_text() {
    let corpus = [
        "x | y",
        "x ^ y",
        "maj(x,y,z)",
        "x -> y",
        "!(a <-> b) & c",
        "T",
    ];
    for f in corpus {
        let table = structured(&["table", f]);
        let text = stdout(&["table", f]);
        assert!(text.contains(&format!(
            "truth vector: {}",
            table["truth_vector"].as_str().unwrap()
        )));
        assert!(text.contains(&format!(
            "function index: f_{}",
            table["function_index"].as_str().unwrap()
        )));
        assert_eq!(
            table["rows"].as_array().unwrap().len(),
            text.lines().count() - 3
        );

        assert_eq!(
            structured(&["poly", f])["polynomial"],
            Value::String(stdout(&["poly", f]))
        );
        assert_eq!(
            structured(&["poly", "--canonical", f])["canonical"],
            Value::String(stdout(&["poly", "--canonical", f]))
        );

        let diag: Vec<String> = structured(&["observable", f])["diagonal"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(
            format!("diag({})", diag.join(",")),
            stdout(&["observable", f])
        );

        let e = structured(&["expect", f, "uniform"])["expectation"]
            .as_f64()
            .unwrap();
        assert_eq!(e.to_string(), stdout(&["expect", f, "uniform"]));
    }
    let eval = structured(&["eval", "x -> y", "10"]);
    assert_eq!(eval["value"], Value::from(0));
    assert_eq!(eval["assignment"], Value::from("(1,0)"));
    let idx = structured(&["index", "0111"]);
    assert_eq!(idx["function_index"], Value::from("14"));
}
