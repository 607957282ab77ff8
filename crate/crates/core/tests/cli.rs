//! The `rtk` binary as a black box: exit codes, file and stdin input, the
//! build → validate → classify round trip, and byte-identical output.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use rtk::classify::{ClassificationReport, LambdaSign, ProductReport};
use rtk::cli::DecomposeOutput;
use rtk::curvature::CurvatureTensor;
use rtk::linalg::SympSpace;
use rtk::scalar::Rational;
use rtk::selftest::SelftestReport;
use rtk::triple::{SymmetricTriple, TripleReport};

fn rtk(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rtk"))
        .args(args)
        .env_remove("RTK_MAX_DIM")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn rtk");
    let mut pipe = child.stdin.take().expect("stdin");
    pipe.write_all(stdin.unwrap_or("").as_bytes())
        .expect("write stdin");
    drop(pipe);
    child.wait_with_output().expect("rtk output")
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = rtk(args, stdin);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn build_sl_gives_dim_eight() {
    let t: SymmetricTriple = serde_json::from_str(&ok(
        &["build", "--family", "sl", "--n", "2", "--s", "1"],
        None,
    ))
    .unwrap();
    assert_eq!(t.dim(), 8);
}

#[test]
fn round_trip_reproduces_parameters() {
    // flags, expected sign of lambda, signature, rank of A
    type Case = (Vec<&'static str>, LambdaSign, (usize, usize), usize);
    let cases: Vec<Case> = vec![
        (
            vec!["--family", "sl", "--n", "2"],
            LambdaSign::Positive,
            (2, 2),
            4,
        ),
        (
            vec!["--family", "sl", "--n", "3", "--s", "-2/3"],
            LambdaSign::Positive,
            (3, 3),
            6,
        ),
        (
            vec!["--family", "su", "--n", "2", "--p", "2"],
            LambdaSign::Negative,
            (2, 0),
            4,
        ),
        (
            vec!["--family", "su", "--n", "3", "--q", "2", "--s", "3"],
            LambdaSign::Negative,
            (1, 2),
            6,
        ),
        (
            vec![
                "--family",
                "nilpotent",
                "--n",
                "2",
                "--rank",
                "1",
                "--p",
                "0",
            ],
            LambdaSign::Zero,
            (0, 1),
            1,
        ),
        (
            vec![
                "--family",
                "nilpotent",
                "--n",
                "3",
                "--rank",
                "2",
                "--p",
                "1",
            ],
            LambdaSign::Zero,
            (1, 1),
            2,
        ),
        (
            vec![
                "--family",
                "nilpotent",
                "--n",
                "3",
                "--rank",
                "3",
                "--q",
                "1",
            ],
            LambdaSign::Zero,
            (2, 1),
            3,
        ),
    ];
    for (flags, sign, signature, rank) in cases {
        let mut args = vec!["build"];
        args.extend(&flags);
        let path = tmp(&format!("rt-{}.json", flags.join("_").replace('/', "over")));
        let path_arg = path.to_str().unwrap();
        args.extend(["--output", path_arg]);
        assert!(ok(&args, None).is_empty());
        let report: TripleReport =
            serde_json::from_str(&ok(&["validate", path_arg], None)).unwrap();
        assert!(report.is_valid(), "{flags:?}");
        let c: ClassificationReport =
            serde_json::from_str(&ok(&["classify", path_arg], None)).unwrap();
        assert_eq!(
            (c.lambda_sign, c.signature, c.rank_a),
            (sign, signature, rank),
            "{flags:?}"
        );
    }
}

#[test]
fn malformed_input_and_bad_flags_exit_2() {
    for (args, stdin) in [
        (vec!["validate", "-"], "{\"n\": 2"),
        (vec!["classify", "-"], "[]"),
        (
            vec!["decompose", "-"],
            "{\"n\": 1, \"omega\": [[0, 1], [1, 0]], \"R\": {}}",
        ),
        (vec!["validate", "/nonexistent/triple.json"], ""),
        (vec!["build", "--family", "sl"], ""),
        (vec!["build", "--family", "so", "--n", "2"], ""),
        (vec!["build", "--family", "su", "--n", "2", "--p", "3"], ""),
        (vec!["build", "--family", "sl", "--n", "2", "--s", "0"], ""),
        (vec!["build", "--family", "sl", "--n", "2", "--s", "x"], ""),
        (vec!["catalog", "--dim", "3"], ""),
        (vec!["selftest", "--criterion", "10"], ""),
        (vec![], ""),
    ] {
        let out = rtk(&args, Some(stdin));
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn max_dim_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_rtk"))
        .args(["build", "--family", "sl", "--n", "3"])
        .env("RTK_MAX_DIM", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = rtk(&["build", "--family", "sl", "--n", "7"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn broken_triple_exits_1_with_failures() {
    let text = ok(&["build", "--family", "sl", "--n", "2"], None);
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    // Scale one [e_i, e_j] entry so the bracket table no longer satisfies Jacobi.
    let pp = v["pp_bracket"].as_object_mut().unwrap();
    let first = pp
        .values_mut()
        .find(|x| x.as_array().unwrap().iter().any(|c| c != "0"))
        .unwrap();
    for c in first.as_array_mut().unwrap() {
        if c != "0" {
            let q: Rational = c.as_str().unwrap().parse().unwrap();
            *c = serde_json::Value::String((q * Rational::from_int(2)).to_string());
        }
    }
    let broken = v.to_string();
    let out = rtk(&["validate", "-"], Some(&broken));
    assert_eq!(out.status.code(), Some(1));
    let report: TripleReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!report.jacobi && !report.failures.is_empty());
    let out = rtk(&["classify", "-"], Some(&broken));
    assert_eq!(out.status.code(), Some(1));
    let failure: rtk::cli::FailureReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!failure.failures.is_empty());
}

#[test]
fn decompose_zero_tensor() {
    let input = rtk::json::to_json_string(&CurvatureTensor::zero(&SympSpace::standard(2).unwrap()));
    let d: DecomposeOutput = serde_json::from_str(&ok(&["decompose", "-"], Some(&input))).unwrap();
    assert_eq!(d.lambda, Some(Rational::zero()));
    assert!(d.w.is_zero() && d.is_ricci_type && d.a.is_zero());
}

#[test]
fn decompose_model_curvature() {
    let m = rtk::models::build_positive_model(2, &Rational::one()).unwrap();
    let r = rtk::triple::curvature_of_triple(&m.triple).unwrap();
    let d: DecomposeOutput = serde_json::from_str(&ok(
        &["decompose", "-"],
        Some(&rtk::json::to_json_string(&r)),
    ))
    .unwrap();
    assert_eq!(d.lambda, Some(Rational::from_int(9)));
    assert!(d.is_ricci_type);
}

#[test]
fn product_check_reports() {
    let input = r#"{"a1": [["1", "0"], ["0", "-1"]], "a2": [["0", "1"], ["0", "0"]]}"#;
    let report: ProductReport =
        serde_json::from_str(&ok(&["product-check", "-"], Some(input))).unwrap();
    assert!(report.theorem_holds && report.cross_block_matches && !report.w_zero);
    let zero = r#"{"a1": [["0", "0"], ["0", "0"]], "a2": [["0", "0"], ["0", "0"]]}"#;
    let report: ProductReport =
        serde_json::from_str(&ok(&["product-check", "-"], Some(zero))).unwrap();
    assert!(report.w_zero && report.cross_block.is_empty());
    // A₁ not infinitesimally symplectic
    let bad = r#"{"a1": [["1", "0"], ["0", "1"]], "a2": [["0", "0"], ["0", "0"]]}"#;
    assert_eq!(
        rtk(&["product-check", "-"], Some(bad)).status.code(),
        Some(1)
    );
}

#[test]
fn catalog_has_nine_entries() {
    let v: serde_json::Value = serde_json::from_str(&ok(&["catalog", "--dim", "4"], None)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 9);
    let v: serde_json::Value = serde_json::from_str(&ok(&["catalog", "--dim", "6"], None)).unwrap();
    // sl, su for p = 0..3, nilpotent ranks 1..3 with p = 0..rank
    assert_eq!(v.as_array().unwrap().len(), 1 + 4 + 2 + 3 + 4);
}

#[test]
fn selftest_passes() {
    let report: SelftestReport = serde_json::from_str(&ok(&["selftest"], None)).unwrap();
    assert_eq!((report.passed, report.failed), (9, 0), "{report:?}");
}

#[test]
fn output_is_byte_identical() {
    for args in [
        vec![
            "build", "--family", "su", "--n", "3", "--p", "1", "--s", "5/7",
        ],
        vec![
            "build",
            "--family",
            "nilpotent",
            "--n",
            "2",
            "--rank",
            "2",
            "--p",
            "1",
        ],
        vec!["catalog", "--dim", "4"],
    ] {
        let a = rtk(&args, None);
        let b = rtk(&args, None);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}
