use std::process::Command;

use orecheb::chebrec::{compute, Algorithm};
use orecheb::cli::{self, parse_operator, parse_table_str, RecurrenceDocument};
use orecheb::series::catalog;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["orecheb"];
    argv.extend_from_slice(args);
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn rec_exp_text() {
    let (code, out, _) = run(&["rec", "--op", "Dx - 1", "--algo", "paszkowski"]);
    assert_eq!(code, 0);
    assert!(out.contains("recurrence:   -c[n] + (2*n + 2)*c[n+1] + c[n+2] = 0"), "{out}");
    let (_, out, _) = run(&["rec", "--op", "Dx - 1", "--algo", "paszkowski", "--centered"]);
    assert!(out.contains("-c[n-1] + 2*n*c[n] + c[n+1] = 0"), "{out}");
}

#[test]
fn rec_json_round_trips() {
    for algo in ["lewanowicz", "paszkowski", "rebillard", "dac"] {
        let (code, out, _) = run(&[
            "rec", "--op", "2*(1-x^2)*Dx - x", "--algo", algo, "--format", "json", "--reduce",
        ]);
        assert_eq!(code, 0);
        let doc = RecurrenceDocument::from_json(&out).unwrap();
        let l = parse_operator("2*(1-x^2)*Dx - x").unwrap();
        let r = orecheb::chebrec::reduce_order(&compute(algo.parse().unwrap(), &l).unwrap()).unwrap();
        assert_eq!(doc.operator().unwrap(), r.operator);
        assert_eq!(doc.order, 2);
        assert_eq!(doc.denominator.is_some(), algo == "lewanowicz");
        if let Some(q) = doc.denominator_op().unwrap() {
            assert_eq!(q, r.denominator);
        }
        let again = RecurrenceDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(again, doc);
    }
}

#[test]
fn json_schema_fields() {
    let (_, out, _) = run(&["rec", "--op", "Dx - 1", "--algo", "lewanowicz", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in [
        "algorithm", "input", "order", "support_offset", "coefficients", "denominator",
        "disclaimer", "timing_ms", "op_count", "recurrence",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["coefficients"], serde_json::json!([[-1], [2, 2], [1]]));
}

#[test]
fn coefficient_table_parses_back() {
    let op = parse_table_str("[[-1], [2, 2], [1]]").unwrap();
    assert_eq!(op.to_string(), "-1 + (2*n + 2)*S + S^2");
    assert!(parse_table_str("[[1.5]]").is_err());
}

#[test]
fn exit_codes() {
    let (code, _, err) = run(&["rec", "--op", "Dx x"]);
    assert_eq!(code, cli::EXIT_INPUT);
    assert!(err.contains("position 3"), "{err}");
    assert_eq!(run(&["rec", "--op", "0"]).0, cli::EXIT_INPUT);
    assert_eq!(run(&["verify", "--function", "sinc"]).0, cli::EXIT_INPUT);
    assert_eq!(run(&["rec", "--op", "Dx", "--algo", "horner"]).0, cli::EXIT_INPUT);
    assert_eq!(run(&["frobnicate"]).0, cli::EXIT_INPUT);
    assert_eq!(run(&["--help"]).0, cli::EXIT_OK);
    // A tolerance no double-precision residual can meet.
    let (code, out, _) = run(&["verify", "--function", "exp", "--algo", "dac", "--tol", "1e-30"]);
    assert_eq!(code, cli::EXIT_VERIFY, "{out}");
    assert!(out.starts_with("FAIL"));
}

#[test]
fn verify_arctanh() {
    let (code, out, _) = run(&["verify", "--function", "arctanh", "--algo", "dac"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("pass arctanh dac"));
}

#[test]
fn catalog_operators_parse_to_definitions() {
    let (code, out, _) = run(&["catalog"]);
    assert_eq!(code, 0);
    for f in catalog() {
        assert!(out.contains(f.name));
        assert_eq!(parse_operator(f.operator_text).unwrap(), f.operator(), "{}", f.name);
    }
}

#[test]
fn bench_is_deterministic_and_seed_env_wins() {
    let strip = |s: &str| -> Vec<String> {
        s.lines()
            .skip(2)
            .filter(|l| !l.starts_with("paszkowski/dac"))
            .map(|l| {
                let f: Vec<&str> = l.split_whitespace().collect();
                format!("{} {} {} {} {}", f[0], f[1], f[2], f[4], f[5])
            })
            .collect()
    };
    let bin = env!("CARGO_BIN_EXE_orecheb");
    let go = |seed: &str, env: Option<&str>| {
        let mut c = Command::new(bin);
        c.args(["bench", "--dmax", "2", "--kmax", "4", "--seed", seed]);
        c.env_remove(cli::SEED_ENV);
        if let Some(e) = env {
            c.env(cli::SEED_ENV, e);
        }
        let o = c.output().unwrap();
        assert!(o.status.success());
        String::from_utf8(o.stdout).unwrap()
    };
    let a = go("7", None);
    let b = go("7", None);
    assert_eq!(strip(&a), strip(&b));
    let c = go("1", Some("7"));
    assert!(c.starts_with("seed 7"));
    assert_eq!(strip(&a), strip(&c));
}

#[test]
fn binary_reports_errors_on_stderr() {
    let o = Command::new(env!("CARGO_BIN_EXE_orecheb"))
        .args(["rec", "--op", "x^-2"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(cli::EXIT_INPUT));
    assert!(String::from_utf8_lossy(&o.stderr).contains("negative exponent"));
}

#[test]
fn all_algorithms_agree_through_the_cli() {
    let op = "(x^2+1)*Dx^2 + 2*x*Dx";
    let tables: Vec<String> = Algorithm::ALL
        .iter()
        .map(|a| {
            let (_, out, _) = run(&["rec", "--op", op, "--algo", a.name(), "--format", "json"]);
            let v: serde_json::Value = serde_json::from_str(&out).unwrap();
            v["coefficients"].to_string()
        })
        .collect();
    assert!(tables.windows(2).all(|w| w[0] == w[1]), "{tables:?}");
}
