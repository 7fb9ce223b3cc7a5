//! End-to-end tests of the command-line surface: exit codes, output
//! formats, corpus spec files, and determinism of the JSON reports.

use proptest::prelude::*;
use rees_cli::report::EnvelopeJson;
use rees_cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("rees".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn downgrade_prints_the_reference_sequence() {
    let (code, out, _) = run_cli(&["downgrade", "--n", "3", "--f", "x1^2*x2 + x1*x3^2"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "f0 = x1^2*x2 + x1*x3^2");
    assert_eq!(lines[2], "f1 = x1*x2*T1 + x3^2*T1");
    assert_eq!(lines[3], "f2 = x2*T1^2 + x3*T1*T3");
    assert_eq!(lines[4], "f3 = T1^2*T2 + T1*T3^2");
}

#[test]
fn verify_worked_example_exits_zero() {
    let (code, out, _) = run_cli(&["verify", "--n", "3", "--f", "x1^2*x2 + x1*x3^2", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "rees-verify/1");
    assert_eq!(v["verdict"], true);
    assert_eq!(v["saturation_index"], 3);
}

#[test]
fn usage_errors_exit_one_with_diagnostics() {
    // Precondition n >= 2.
    let (code, _, err) = run_cli(&["classify", "--n", "1", "--f", "x1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("two variables"), "{err}");
    // Malformed polynomial.
    let (code, _, err) = run_cli(&["verify", "--n", "2", "--f", "x1 +"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("parse error"), "{err}");
    // Unknown flag.
    let (code, _, err) = run_cli(&["verify", "--n", "2", "--f", "x1^2", "--bogus"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
    // Non-prime field.
    let (code, _, err) = run_cli(&["verify", "--n", "2", "--f", "x1^2", "--field", "100"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("prime"), "{err}");
    // Missing required flags.
    let (code, _, _) = run_cli(&["verify"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run_cli(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("downgrade"));
}

#[test]
fn budget_exhaustion_is_a_failure_not_a_usage_error() {
    let (code, _, err) = run_cli(&[
        "verify",
        "--n",
        "3",
        "--f",
        "x1^2*x2 + x1*x3^2",
        "--budget",
        "5",
    ]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(err.contains("budget"), "{err}");
}

#[test]
fn rees_ideal_both_methods_agree_up_to_basis() {
    let (code, out, _) = run_cli(&[
        "rees-ideal",
        "--n",
        "2",
        "--f",
        "x2^2",
        "--method",
        "saturation",
        "--json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "rees-ideal/1");
    assert_eq!(v["saturation_index"], 2);
    let (code2, out2, _) = run_cli(&[
        "rees-ideal",
        "--n",
        "2",
        "--f",
        "x2^2",
        "--method",
        "downgrade",
    ]);
    assert_eq!(code2, EXIT_OK);
    assert!(out2.contains("4 generators"), "{out2}");
}

#[test]
fn classify_json_round_trips_through_the_grammar() {
    let (code, out, _) = run_cli(&[
        "classify",
        "--n",
        "3",
        "--f",
        "x1*x2 + x3^2",
        "--json",
        "--no-timings",
    ]);
    assert_eq!(code, EXIT_OK);
    let envelope: EnvelopeJson = serde_json::from_str(&out).unwrap();
    assert_eq!(envelope.schema, "rees-report/1");
    assert_eq!(envelope.passed, 1);
    let case = &envelope.cases[0];
    assert_eq!(case.cm, Some(true));
    // Reported polynomials parse back as input.
    let ring = rees_core::Ring::new(3, rees_core::Field::default_prime()).unwrap();
    rees_core::parse_polynomial(&case.f, ring).unwrap();
    rees_core::parse_polynomial(case.fiber_generator.as_ref().unwrap(), ring).unwrap();
}

#[test]
fn corpus_from_spec_file_with_pure_power_reports_fiber() {
    let dir = std::env::temp_dir().join(format!("rees-spec-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.json");
    std::fs::write(
        &path,
        r#"{ "cases": [
            { "n": 2, "f": "x2^3" },
            { "n": 2, "d": 2, "count": 2, "seed": 5 }
        ] }"#,
    )
    .unwrap();
    let (code, out, err) = run_cli(&["corpus", "--spec", path.to_str().unwrap(), "--no-timings"]);
    assert_eq!(code, EXIT_OK, "stderr: {err}");
    let envelope: EnvelopeJson = serde_json::from_str(&out).unwrap();
    assert_eq!(envelope.cases.len(), 3);
    assert_eq!(envelope.passed, 3);
    assert_eq!(envelope.failed, 0);
    assert_eq!(envelope.cases[0].fiber_generator.as_deref(), Some("T2^3"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn wider_grid_holds_past_the_acceptance_range() {
    // Larger n and d than the standard grid, including the boundary case
    // d = n, where the depth drops to n - 1 for the first time.
    let dir = std::env::temp_dir().join(format!("rees-wide-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wide.json");
    std::fs::write(
        &path,
        r#"{ "cases": [
            { "n": 2, "d": 6, "count": 1 },
            { "n": 4, "d": 4, "count": 1 },
            { "n": 5, "d": 2, "count": 1 }
        ] }"#,
    )
    .unwrap();
    let (code, out, err) = run_cli(&[
        "corpus",
        "--spec",
        path.to_str().unwrap(),
        "--no-timings",
        "--seed",
        "5",
    ]);
    assert_eq!(code, EXIT_OK, "stderr: {err}");
    let envelope: EnvelopeJson = serde_json::from_str(&out).unwrap();
    assert_eq!(envelope.passed, 3);
    let depths: Vec<Option<usize>> = envelope.cases.iter().map(|c| c.depth).collect();
    assert_eq!(depths, vec![Some(1), Some(3), Some(5)]);
    assert_eq!(
        envelope.cases.iter().map(|c| c.cm).collect::<Vec<_>>(),
        vec![Some(false), Some(false), Some(true)]
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn empty_corpus_passes_with_zero_cases() {
    let dir = std::env::temp_dir().join(format!("rees-empty-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.json");
    std::fs::write(&path, r#"{ "cases": [] }"#).unwrap();
    let (code, out, _) = run_cli(&["corpus", "--spec", path.to_str().unwrap(), "--no-timings"]);
    assert_eq!(code, EXIT_OK);
    let envelope: EnvelopeJson = serde_json::from_str(&out).unwrap();
    assert!(envelope.cases.is_empty());
    assert_eq!(envelope.passed + envelope.failed, 0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn corpus_spec_parse_error_exits_one() {
    let dir = std::env::temp_dir().join(format!("rees-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    let (code, _, err) = run_cli(&["corpus", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("corpus spec"), "{err}");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn corpus_json_is_deterministic_for_a_fixed_seed() {
    let dir = std::env::temp_dir().join(format!("rees-det-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("det.json");
    std::fs::write(
        &path,
        r#"{ "cases": [ { "n": 2, "d": 3, "count": 3 }, { "n": 3, "f": "x1^2*x2 + x1*x3^2" } ] }"#,
    )
    .unwrap();
    let spec = path.to_str().unwrap();
    let (c1, out1, _) = run_cli(&["corpus", "--spec", spec, "--seed", "7", "--no-timings"]);
    let (c2, out2, _) = run_cli(&["corpus", "--spec", spec, "--seed", "7", "--no-timings"]);
    let (c3, out3, _) = run_cli(&[
        "corpus",
        "--spec",
        spec,
        "--seed",
        "7",
        "--no-timings",
        "--jobs",
        "1",
    ]);
    assert_eq!(c1, EXIT_OK);
    assert_eq!(c1, c2);
    assert_eq!(c1, c3);
    assert_eq!(out1, out2, "same seed must give byte-identical JSON");
    assert_eq!(out1, out3, "jobs count must not change the report");
    let (_, out4, _) = run_cli(&["corpus", "--spec", spec, "--seed", "8", "--no-timings"]);
    assert_ne!(out1, out4, "different seed should draw different instances");
    std::fs::remove_dir_all(&dir).ok();
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The exit-code contract holds on arbitrary junk: never a panic, and
    /// anything malformed maps to the usage exit code.
    #[test]
    fn exit_codes_stay_in_contract(
        sub in prop_oneof![
            Just("downgrade".to_string()),
            Just("verify".to_string()),
            Just("classify".to_string()),
            "[a-z]{1,8}"
        ],
        n in "[0-9a-z]{1,3}",
        f in "[x1-3T^*+ -]{0,16}",
    ) {
        let (code, _, _) = run_cli(&[&sub, "--n", &n, "--f", &f]);
        prop_assert!(code == EXIT_OK || code == EXIT_USAGE || code == EXIT_FAILURE);
        if sub == "verify" || sub == "downgrade" || sub == "classify" {
            // Junk n or junk f must not report success unless it parsed.
            if n.parse::<usize>().is_err() {
                prop_assert_eq!(code, EXIT_USAGE);
            }
        } else {
            prop_assert_eq!(code, EXIT_USAGE);
        }
    }
}
