//! End-to-end tests of the command-line binary: exact output bytes, the JSON
//! and CSV schemas, the three exit codes, and determinism across runs.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_watermelon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal termination")
}

#[test]
fn exact_emits_contract_json() {
    assert_eq!(
        stdout_of(&["exact", "--n", "2", "--t", "4", "--y", "0", "--method", "thm8"]),
        "{\"n\":2,\"t\":4,\"y\":0,\"coeffs\":{\"2\":\"1\",\"3\":\"2\"}}\n"
    );
    assert_eq!(
        stdout_of(&["exact", "--n", "1", "--t", "2", "--y", "0", "--method", "oracle"]),
        "{\"n\":1,\"t\":2,\"y\":0,\"coeffs\":{\"2\":\"1\"}}\n"
    );
    assert_eq!(
        stdout_of(&[
            "exact",
            "--n",
            "1",
            "--t",
            "3",
            "--y",
            "1",
            "--method",
            "det-watermelon"
        ]),
        "{\"n\":1,\"t\":3,\"y\":1,\"coeffs\":{\"1\":\"1\",\"2\":\"1\"}}\n"
    );
}

#[test]
fn exact_all_methods_agree_on_watermelon_flags() {
    let expected = "{\"n\":2,\"t\":4,\"y\":0,\"coeffs\":{\"2\":\"1\",\"3\":\"2\"}}\n";
    for method in [
        "oracle",
        "det-general",
        "det-watermelon",
        "det-dev0",
        "thm4",
        "thm8",
        "thm9",
    ] {
        assert_eq!(
            stdout_of(&["exact", "--n", "2", "--t", "4", "--y", "0", "--method", method]),
            expected,
            "method {method}"
        );
    }
}

#[test]
fn exact_general_endpoints_report_null_deviation() {
    assert_eq!(
        stdout_of(&[
            "exact",
            "--t",
            "4",
            "--a",
            "0,2",
            "--e",
            "0,2",
            "--method",
            "det-general"
        ]),
        "{\"n\":2,\"t\":4,\"y\":null,\"coeffs\":{\"2\":\"1\",\"3\":\"2\"}}\n"
    );
}

#[test]
fn exact_zero_length_routes_to_enumeration_for_every_method() {
    for method in ["oracle", "thm8", "det-watermelon"] {
        assert_eq!(
            stdout_of(&["exact", "--n", "2", "--t", "0", "--y", "0", "--method", method]),
            "{\"n\":2,\"t\":0,\"y\":0,\"coeffs\":{\"1\":\"1\"}}\n",
            "method {method}"
        );
    }
}

#[test]
fn usage_and_domain_errors_exit_2() {
    // unknown flag
    assert_eq!(exit_code(&run(&["exact", "--bogus"])), 2);
    // parity violation
    assert_eq!(
        exit_code(&run(&["exact", "--n", "2", "--t", "5", "--y", "0"])),
        2
    );
    // watermelon-only method with general endpoints
    assert_eq!(
        exit_code(&run(&[
            "exact", "--t", "4", "--a", "0,2", "--e", "0,2", "--method", "thm8"
        ])),
        2
    );
    // zero-deviation method on nonzero deviation
    assert_eq!(
        exit_code(&run(&[
            "exact", "--n", "2", "--t", "4", "--y", "2", "--method", "thm4"
        ])),
        2
    );
    // malformed fugacity
    assert_eq!(
        exit_code(&run(&[
            "contacts", "--n", "1", "--t", "2", "--y", "0", "--kappa", "1/0"
        ])),
        2
    );
    // help and version are not errors
    assert_eq!(exit_code(&run(&["--help"])), 0);
    assert_eq!(exit_code(&run(&["--version"])), 0);
}

#[test]
fn crosscheck_passes_and_is_deterministic() {
    let args = ["crosscheck", "--max-n", "2", "--max-t", "6", "--max-y", "2"];
    let first = run(&args);
    assert_eq!(exit_code(&first), 0);
    let text = String::from_utf8(first.stdout.clone()).unwrap();
    assert!(text.contains("n=1 t=0 y=0 routes=[oracle] PASS"));
    assert!(text.contains(
        "n=2 t=6 y=0 routes=[oracle det-general det-watermelon thm8 thm9 det-dev0 thm4] PASS"
    ));
    assert!(text.trim_end().ends_with("crosscheck PASS (20 instances)"));
    // concurrent evaluation must not perturb the output bytes
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn crosscheck_detects_injected_mismatch() {
    let out = run(&[
        "crosscheck",
        "--max-n",
        "1",
        "--max-t",
        "4",
        "--max-y",
        "0",
        "--inject-mismatch",
    ]);
    assert_eq!(exit_code(&out), 1);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL route=thm8"), "got: {text}");
    assert!(text.contains("expected="), "got: {text}");
}

#[test]
fn contacts_rational_fugacity_is_exact() {
    assert_eq!(
        stdout_of(&["contacts", "--n", "2", "--t", "4", "--y", "0", "--kappa", "1"]),
        "{\"n\":2,\"t\":4,\"y\":0,\"kappa\":\"1\",\"mean\":\"8/3\"}\n"
    );
    assert_eq!(
        stdout_of(&[
            "contacts", "--n", "2", "--t", "4", "--y", "0", "--kappa", "1", "--format", "csv"
        ]),
        "n,t,y,kappa,mean\n2,4,0,1,8/3\n"
    );
}

#[test]
fn contacts_decimal_fugacity_is_floating() {
    assert_eq!(
        stdout_of(&["contacts", "--n", "2", "--t", "4", "--y", "0", "--kappa", "1.0"]),
        "{\"n\":2,\"t\":4,\"y\":0,\"kappa\":\"1.0000000000000000e0\",\"mean\":2.6666666666666665e0}\n"
    );
}

#[test]
fn asym_point_reports_regime_fields() {
    let text = stdout_of(&[
        "asym", "--n", "1", "--y", "0", "--kappa", "2", "--t", "1000",
    ]);
    assert!(
        text.starts_with("{\"n\":1,\"y\":0,\"kappa\":\"2\",\"t\":1000,\"regime\":\"critical\",")
    );
    for key in [
        "growth_rate",
        "critical_exponent",
        "constant",
        "ln_value",
        "mean",
    ] {
        assert!(
            text.contains(&format!("\"{key}\":")),
            "missing {key} in {text}"
        );
    }
    // floating values carry 17 significant digits
    assert!(text.contains("\"growth_rate\":2.0000000000000000e0"));
}

#[test]
fn asym_report_emits_convergence_table() {
    let text = stdout_of(&[
        "asym", "--n", "1", "--y", "0", "--kappa", "2", "--t", "500", "--t", "1000", "--report",
        "--format", "csv",
    ]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,ln_exact,ln_asym,gap");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("500,"));
    assert!(lines[2].starts_with("1000,"));
    // gaps shrink with length
    let gap = |line: &str| line.rsplit(',').next().unwrap().parse::<f64>().unwrap();
    assert!(gap(lines[2]) < gap(lines[1]));
}

#[test]
fn asym_point_mode_requires_single_length() {
    let out = run(&[
        "asym", "--n", "1", "--y", "0", "--kappa", "2", "--t", "10", "--t", "20",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn bijection_traces_and_validates_index() {
    let text = stdout_of(&[
        "bijection",
        "--n",
        "2",
        "--t",
        "4",
        "--y",
        "0",
        "--family",
        "0",
    ]);
    assert!(text.contains("configuration n=2 t=4 y=0, family 0 of 3"));
    assert!(text.contains("start tableau"));
    assert!(text.contains("image family"));
    assert!(text.contains("contacts transported:"));
    let out = run(&[
        "bijection",
        "--n",
        "2",
        "--t",
        "4",
        "--y",
        "0",
        "--family",
        "99",
    ]);
    assert_eq!(exit_code(&out), 2);
}
