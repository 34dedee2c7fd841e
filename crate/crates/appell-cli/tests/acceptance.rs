//! CLI acceptance: deterministic documents, the stated gamma/table
//! examples, exit codes, and a full `verify` run.

use std::path::Path;
use std::process::{Command, Output};

use appell_cli::output::OutputDocument;

fn appell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_appell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = appell(args);
    assert!(
        out.status.success(),
        "appell {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

/// Runs the command twice and checks the bytes match before returning them.
fn deterministic_stdout(args: &[&str]) -> String {
    let first = appell(args);
    let second = appell(args);
    assert_eq!(
        first.stdout, second.stdout,
        "appell {args:?} not byte-stable"
    );
    assert_eq!(first.status.code(), second.status.code());
    String::from_utf8(first.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    appell(args).status.code().expect("exit code")
}

#[test]
fn criterion_11_gamma_documents() {
    let bernoulli = deterministic_stdout(&["gamma", "bernoulli", "4"]);
    assert!(bernoulli.ends_with("1,1/2,1/3,1/4,1/5\n"), "{bernoulli}");

    let euler = deterministic_stdout(&["gamma", "euler", "3"]);
    assert!(euler.ends_with("1,1/2,1/2,1/2\n"), "{euler}");

    let genocchi = appell(&["gamma", "genocchi", "3"]);
    assert_eq!(genocchi.status.code(), Some(4));
    let stderr = String::from_utf8_lossy(&genocchi.stderr);
    assert!(
        stderr.contains("transfer matrix singular"),
        "stderr: {stderr}"
    );

    println!("PASS  criterion 11a: gamma documents are byte-stable with the stated values");
}

#[test]
fn criterion_11_table_documents() {
    let monomial = deterministic_stdout(&["table", "monomial", "3", "--format", "csv"]);
    let expected = "family,monomial\nm,3\nparams,\nkind,transfer-matrix\n\
                    1,0,0,0\n0,1,0,0\n0,0,1,0\n0,0,0,1\n";
    assert_eq!(monomial, expected);

    let bernoulli = deterministic_stdout(&["table", "bernoulli", "2", "--format", "json"]);
    let doc = OutputDocument::from_json(&bernoulli).expect("valid json");
    assert_eq!(doc.family, "bernoulli");
    match &doc.data {
        appell_cli::output::Payload::Matrix(rows) => {
            assert_eq!(rows[1], vec!["-1/2", "1", "0"]);
            assert_eq!(rows[2], vec!["1/6", "-1", "1"]);
        }
        other => panic!("expected a matrix payload, got {other:?}"),
    }

    let genocchi = deterministic_stdout(&["table", "genocchi", "2"]);
    let doc = OutputDocument::from_csv(&genocchi).expect("valid csv");
    match &doc.data {
        appell_cli::output::Payload::Matrix(rows) => {
            for (i, row) in rows.iter().enumerate() {
                assert_eq!(row[i], "0", "zero diagonal at {i}");
            }
            assert_eq!(rows[2], vec!["-1", "2", "0"]);
        }
        other => panic!("expected a matrix payload, got {other:?}"),
    }

    println!("PASS  criterion 11b: table documents are byte-stable with the stated rows");
}

#[test]
fn criterion_11_verify_exits_zero() {
    let out = appell(&["verify", "--m-max", "16", "--seed", "42"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("0 failed"), "{stdout}");

    println!("PASS  criterion 11c: verify --m-max 16 --seed 42 exits 0");
}

#[test]
fn verify_is_deterministic_and_filterable() {
    let a = deterministic_stdout(&["verify", "--m-max", "6", "--seed", "7"]);
    assert!(a.contains("summary: 21 checks, 21 passed, 0 failed, 0 skipped"));

    let genocchi_only = stdout_of(&["verify", "--m-max", "6", "--families", "genocchi"]);
    assert!(genocchi_only.contains("N/A  inverse-coefficients"));
    assert!(genocchi_only.contains("PASS genocchi-boundary"));
    assert!(genocchi_only.contains("0 failed"));

    let trivial = stdout_of(&["verify", "--m-max", "0"]);
    assert!(trivial.contains("0 failed"));
}

#[test]
fn eval_examples() {
    assert!(stdout_of(&["eval", "monomial", "3", "2"]).ends_with("1,2,4,8\n"));
    assert!(stdout_of(&["eval", "bernoulli", "2", "0"]).ends_with("1,-1/2,1/6\n"));
    let cheb = stdout_of(&["eval", "chebyshev1-modified", "3", "1/2", "--classical"]);
    assert!(cheb.ends_with("1,1/2,-1/2,-1\n"), "{cheb}");
    assert!(cheb.contains("kind,classical-values"));
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(exit_code(&["table", "nope", "3"]), 2);
    assert_eq!(exit_code(&["eval", "bernoulli", "2", "not-a-number"]), 2);
    assert_eq!(exit_code(&["table", "bernoulli", "2", "--alpha", "1/2"]), 2);
    assert_eq!(exit_code(&["table", "laguerre-modified", "2"]), 2);
    assert_eq!(exit_code(&["table", "custom", "2"]), 2);
    assert_eq!(
        exit_code(&["eval", "bernoulli", "2", "1", "--classical"]),
        2
    );
    assert_eq!(exit_code(&["verify", "--families", "nope"]), 2);
    // domain error: classical reconstruction outside (-1, 1)
    assert_eq!(
        exit_code(&["eval", "legendre-modified", "2", "1", "--classical"]),
        3
    );
    assert_eq!(
        exit_code(&["eval", "chebyshev2-modified", "2", "-7/3", "--classical"]),
        3
    );
    // singular transfer matrix
    assert_eq!(exit_code(&["gamma", "genocchi", "3"]), 4);
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("appell-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("table.json");

    let stdout = stdout_of(&["table", "euler", "3", "--format", "json"]);
    let out = appell(&[
        "table",
        "euler",
        "3",
        "--format",
        "json",
        "--out",
        path.to_str().expect("utf-8 path"),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).expect("file written");
    assert_eq!(written, stdout);

    std::fs::remove_dir_all(Path::new(&dir)).ok();
}

#[test]
fn documents_round_trip_through_both_formats() {
    let json = stdout_of(&[
        "table",
        "laguerre-modified",
        "3",
        "--alpha",
        "1/2",
        "--format",
        "json",
    ]);
    let doc = OutputDocument::from_json(&json).expect("valid json");
    assert_eq!(doc.to_json(), json);

    let csv = stdout_of(&[
        "table",
        "laguerre-modified",
        "3",
        "--alpha",
        "1/2",
        "--format",
        "csv",
    ]);
    let doc_csv = OutputDocument::from_csv(&csv).expect("valid csv");
    assert_eq!(doc_csv.to_csv(), csv);

    // both formats carry the same document
    assert_eq!(doc, doc_csv);
    assert_eq!(doc.params.get("alpha").map(String::as_str), Some("1/2"));

    let gamma_csv = stdout_of(&["gamma", "generalized-euler", "3", "--gamma-bar", "1/3"]);
    let gdoc = OutputDocument::from_csv(&gamma_csv).expect("valid csv");
    assert_eq!(gdoc.to_csv(), gamma_csv);
    assert_eq!(gdoc.kind, "gamma");
}
