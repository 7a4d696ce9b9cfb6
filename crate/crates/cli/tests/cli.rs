use std::process::{Command, Output};

use fibrun::genfunc::{catalog_expand, GfId};
use fibrun::polyring::PolyJson;
use fibrun::{build, census, Family, MPoly, Method, PolyKind};

fn fibrun(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibrun"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fibrun(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn poly_r5_text() {
    let out = stdout(&[
        "poly",
        "--family",
        "r",
        "--n",
        "5",
        "--kind",
        "dist-cube",
        "--method",
        "oracle",
        "--format",
        "text",
    ]);
    assert_eq!(out, "1+5q+6q^2+q^3+(5+12q+2q^2)x+(6+q)x^2\n");
}

#[test]
fn lucas_run_of_length_one() {
    assert_eq!(stdout(&["vertices", "--family", "rl", "--n", "1"]), "0\n");
}

#[test]
fn lucas_run_5_vertices() {
    let out = stdout(&["vertices", "--family", "rl", "--n", "5", "--format", "json"]);
    let words: Vec<String> = serde_json::from_str(&out).unwrap();
    assert_eq!(words.len(), 11);
    assert!(!words.contains(&"10001".to_string()));
    assert!(!words.contains(&"11100".to_string()));
}

#[test]
fn verify_euler_passes() {
    let out = fibrun(&["verify", "--id", "euler", "--n-max", "10"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_flags_exit_2() {
    for args in [
        &["poly", "--family", "nope", "--n", "3"][..],
        &["poly", "--family", "r"],
        &["vertices", "--family", "r", "--n", "-1"],
        &["gf", "--id", "d-x"],
        &["verify", "--id", "euler"],
        &["bogus"],
    ] {
        assert_eq!(fibrun(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn caps_and_unsupported_combinations_exit_2() {
    for args in [
        &["vertices", "--family", "r", "--n", "31"][..],
        &["poly", "--family", "q", "--n", "13", "--method", "oracle"],
        &["poly", "--family", "q", "--n", "3", "--method", "gf"],
        &["verify", "--id", "euler", "--n-max", "3", "--method", "gf"],
        &["verify", "--id", "euler", "--n-max", "3", "--format", "csv"],
    ] {
        let out = fibrun(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

fn from_json(text: &str) -> MPoly {
    let form: PolyJson = serde_json::from_str(text).unwrap();
    MPoly::from_json_form(&form).unwrap()
}

#[test]
fn poly_json_round_trips() {
    let cases = [
        (Family::FibonacciRun, "r", 5, PolyKind::DistCube, "dist-cube"),
        (Family::LucasRun, "rl", 9, PolyKind::DistCube, "dist-cube"),
        (Family::Fibonacci, "gamma", 8, PolyKind::Weight, "weight"),
        (Family::Lucas, "lambda", 7, PolyKind::Cube, "cube"),
        (Family::FibonacciRun, "r", 10, PolyKind::Dcw, "dcw"),
        (Family::FibonacciRun, "r", 12, PolyKind::Updeg, "updeg"),
    ];
    for (family, code, n, kind, kind_code) in cases {
        let expected = census::polynomial(&build(family, n).unwrap(), kind, Method::TopVertex).unwrap();
        for method in ["oracle", "topvertex", "gf"] {
            let n_text = n.to_string();
            let out = stdout(&[
                "poly", "--family", code, "--n", &n_text, "--kind", kind_code, "--method", method, "--format", "json",
            ]);
            assert_eq!(from_json(&out), expected, "{code} {n} {kind_code} {method}");
        }
    }
}

#[test]
fn gf_json_round_trips() {
    for id in [GfId::DcwR, GfId::DR, GfId::DRl, GfId::UpdegR] {
        let out = stdout(&["gf", "--id", id.code(), "--order", "24", "--format", "json"]);
        let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
        let coeffs = doc["coefficients"].as_array().unwrap();
        let expected = catalog_expand(id, 24);
        assert_eq!(coeffs.len(), expected.len());
        for (c, e) in coeffs.iter().zip(&expected) {
            assert_eq!(from_json(&c.to_string()), *e, "{}", id.code());
        }
    }
}

#[test]
fn gf_text_lists_coefficients() {
    let out = stdout(&["gf", "--id", "d-r", "--order", "2"]);
    assert_eq!(out, "0\t1\n1\t1+q+x\n2\t1+2q+2x\n");
}

#[test]
fn csv_output_has_header_and_rows() {
    let out = stdout(&["poly", "--family", "r", "--n", "2", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("q,x,coeff"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn output_is_independent_of_thread_count() {
    let args = [
        "poly",
        "--family",
        "r",
        "--n",
        "16",
        "--method",
        "topvertex",
        "--format",
        "json",
    ];
    let runs: Vec<String> = ["1", "2", "8"]
        .iter()
        .map(|t| {
            let mut a = args.to_vec();
            a.extend(["--threads", t]);
            stdout(&a)
        })
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let env_run = Command::new(env!("CARGO_BIN_EXE_fibrun"))
        .args(args)
        .env("FIBRUN_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(env_run.stdout).unwrap(), runs[0]);

    let verify: Vec<Vec<u8>> = ["1", "4"]
        .iter()
        .map(|t| {
            fibrun(&[
                "verify",
                "--id",
                "lucas-run-recurrence",
                "--n-max",
                "12",
                "--format",
                "json",
                "--threads",
                t,
            ])
            .stdout
        })
        .collect();
    assert_eq!(verify[0], verify[1]);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("fibrun-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r3.txt");
    let out = fibrun(&["vertices", "--family", "r", "--n", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "000\n001\n010\n100\n110\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn repro_passes_and_json_is_reproducible() {
    let a = fibrun(&["repro", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    let b = fibrun(&["repro", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 12);

    let seeded = fibrun(&["repro", "--seed", "7"]);
    assert_eq!(seeded.status.code(), Some(0));
    assert!(String::from_utf8(seeded.stdout).unwrap().starts_with("seed 7\n"));
}
