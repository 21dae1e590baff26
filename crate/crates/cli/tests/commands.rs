use std::process::Command;

use implicit_cli::{exit, run, PolyDoc};

const HX: &str = "(1+t)/(2+t)";
const HY: &str = "(3+t)/(4+t)";
const CX: &str = "(2*t^2+2*t+1)/(t^3+5)";
const CY: &str = "(t^3-3*t^2+t-1)/(t^2-3)";
/// Reference form, opposite in sign to the canonical one.
const CUBIC_F: &str = "-53 + 42*y - 74*y^2 + 172*x + 707*x*y + 121*x*y^2 + 37*x*y^3 - 652*x^2 \
    - 1156*x^2*y - 490*x^2*y^2 - 34*x^2*y^3 + 626*x^3 + 396*x^3*y + 432*x^3*y^2 - 2*x^3*y^3";

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("implicit").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn implicitize_hyperbola_every_method() {
    for method in ["unstructured", "dualvand", "kron"] {
        let (code, out, err) = call(&["implicitize", "--x", HX, "--y", HY, "--method", method]);
        assert_eq!(code, exit::OK, "{err}");
        assert_eq!(out.trim(), "2 - 3*y - x + 2*x*y");
    }
}

#[test]
fn implicitize_parabola() {
    let (code, out, _) = call(&["implicitize", "--x", "t", "--y", "t^2"]);
    assert_eq!(code, exit::OK);
    assert_eq!(out.trim(), "y - x^2");
}

#[test]
fn implicitize_json_document() {
    let (code, out, _) = call(&["implicitize", "--x", HX, "--y", HY, "--json"]);
    assert_eq!(code, exit::OK);
    assert_eq!(
        out.trim(),
        r#"{"m":1,"n":1,"basis":"x^i*y^j (i-major)","coeffs":[["2","-3"],["-1","2"]],"verified":true,"degree_tight":true,"method":"kron"}"#
    );
    let doc: PolyDoc = serde_json::from_str(&out).unwrap();
    assert_eq!((doc.m, doc.n), (1, 1));
}

#[test]
fn json_and_human_forms_encode_the_same_polynomial() {
    let (_, human, _) = call(&["implicitize", "--x", CX, "--y", CY]);
    let (_, json, _) = call(&["implicitize", "--x", CX, "--y", CY, "--json"]);
    let from_json = implicit_cli::poly_from_json(&json).unwrap();
    let from_human = implicit_cli::parse_bipoly(human.trim()).unwrap();
    assert_eq!(from_json, from_human);
    let reference = implicit_cli::parse_bipoly(CUBIC_F).unwrap();
    assert_eq!(from_human, reference.scale(&implicit_core::rat::int(-1)));
}

#[test]
fn implicitize_writes_out_file() {
    let path = std::env::temp_dir().join(format!("implicit-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = call(&["implicitize", "--x", HX, "--y", HY, "--json", "--out", p]);
    assert_eq!(code, exit::OK);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains(r#""coeffs":[["2","-3"],["-1","2"]]"#));

    let (code, _, _) = call(&["verify", "--x", HX, "--y", HY, "--poly", p]);
    assert_eq!(code, exit::OK);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn primes_change_nodes_not_result() {
    let (code, out, _) = call(&[
        "implicitize",
        "--x",
        CX,
        "--y",
        CY,
        "--method",
        "dualvand",
        "--primes",
        "5,7",
    ]);
    assert_eq!(code, exit::OK);
    assert!(out.starts_with("53 - 42*y + 74*y^2"), "{out}");
}

#[test]
fn parse_errors_exit_1() {
    for args in [
        vec!["implicitize", "--x", "(1+t", "--y", HY],
        vec!["implicitize", "--x", HX, "--y", "1/(t-t)"],
        vec!["implicitize", "--x", HX, "--y", HY, "--method", "groebner"],
        vec!["implicitize", "--x", HX, "--y", HY, "--primes", "4,3"],
        vec!["implicitize", "--x", HX, "--y", HY, "--primes", "2"],
        vec!["implicitize", "--x", HX],
        vec!["frobnicate"],
        vec!["bench", "--x", HX, "--y", HY, "--repeat", "0"],
        vec!["verify", "--x", HX, "--y", HY, "--poly", "x +"],
        vec!["verify", "--x", HX, "--y", HY, "--poly", "0"],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, exit::PARSE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn parse_error_mentions_column() {
    let (_, _, err) = call(&["implicitize", "--x", "1 + 2t", "--y", HY]);
    assert!(err.contains("--x") && err.contains("column 6"), "{err}");
}

#[test]
fn degenerate_input_exit_2() {
    let (code, _, err) = call(&["implicitize", "--x", "t", "--y", "5"]);
    assert_eq!(code, exit::DEGENERATE, "{err}");
    let (code, _, _) = call(&[
        "implicitize",
        "--x",
        "t^2",
        "--y",
        "t^4",
        "--method",
        "unstructured",
    ]);
    assert_eq!(code, exit::DEGENERATE);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, exit::OK);
    assert!(out.contains("implicitize") && out.contains("verify"));
}

#[test]
fn bench_table_and_json() {
    let (code, out, _) = call(&["bench", "--x", HX, "--y", HY, "--repeat", "3"]);
    assert_eq!(code, exit::OK);
    for m in ["unstructured", "dualvand", "kron", "max_bits"] {
        assert!(out.contains(m), "{out}");
    }
    let (code, out, _) = call(&[
        "bench",
        "--x",
        CX,
        "--y",
        CY,
        "--methods",
        "kron,dualvand",
        "--json",
    ]);
    assert_eq!(code, exit::OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert_eq!(records[0]["method"], "kron");
    assert_eq!(records[0]["hash"], records[1]["hash"]);
    assert!(records[0]["max_bits"].as_u64().unwrap() <= 20);
    assert!(records[1]["max_bits"].as_u64().unwrap() >= 100);
}

#[test]
fn verify_examples() {
    let (code, _, _) = call(&[
        "verify",
        "--x",
        HX,
        "--y",
        HY,
        "--poly",
        "2 - 3*y - x + 2*x*y",
    ]);
    assert_eq!(code, exit::OK);
    let (code, _, _) = call(&["verify", "--x", HX, "--y", HY, "--poly", "x"]);
    assert_eq!(code, exit::NOT_ON_CURVE);
    let (code, _, _) = call(&["verify", "--x", CX, "--y", CY, "--poly", CUBIC_F]);
    assert_eq!(code, exit::OK);
    let (code, _, _) = call(&[
        "verify",
        "--x",
        HX,
        "--y",
        HY,
        "--poly",
        r#"{"coeffs":[["-4","6"],["2","-4"]]}"#,
    ]);
    assert_eq!(code, exit::OK);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_implicit");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let o = status(&["implicitize", "--x", HX, "--y", HY]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&o.stdout).trim(),
        "2 - 3*y - x + 2*x*y"
    );
    let o = status(&["implicitize", "--x", "t+", "--y", HY]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty() && !o.stderr.is_empty());
    assert_eq!(
        status(&["verify", "--x", HX, "--y", HY, "--poly", "x"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        status(&["implicitize", "--x", "3", "--y", "t"])
            .status
            .code(),
        Some(2)
    );
}
