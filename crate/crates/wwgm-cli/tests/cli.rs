//! End-to-end tests of the binary surface: exact output shapes, exit codes,
//! and parse errors with byte offsets.

use std::process::{Command, Output};

fn wwgm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wwgm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = wwgm(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn order_json_shape_is_stable() {
    let got = stdout(&["order", "1", "1", "--s", "0", "--format", "json"]);
    assert_eq!(
        got,
        r#"{"terms":[{"n":1,"m":1,"re":"1","im":"0","hbar_pow":0},{"n":0,"m":0,"re":"0","im":"-1/2","hbar_pow":1}]}"#
    );
}

#[test]
fn order_standard_and_antistandard() {
    assert_eq!(stdout(&["order", "2", "3", "--s", "1"]), "Q^2*P^3");
    // antistandard ordering of qp is the reversed product
    assert_eq!(stdout(&["order", "1", "1", "--s", "-1"]), "Q*P - i*hbar");
}

#[test]
fn star_and_moyal_text() {
    assert_eq!(stdout(&["star", "q", "p", "--s", "0"]), "q*p - 1/2*i*hbar");
    assert_eq!(
        stdout(&["moyal", "q^2", "p^2"]),
        "-4*i*hbar*q*p - 2*hbar^2*s"
    );
    assert_eq!(stdout(&["poisson", "q", "p"]), "-1");
    assert_eq!(
        stdout(&["poisson", "q", "p", "--convention", "standard"]),
        "1"
    );
}

#[test]
fn hbar_substitution_applies_to_output() {
    assert_eq!(stdout(&["moyal", "q", "p", "--s", "0", "--hbar", "2"]), "-2*i");
}

#[test]
fn quantize_symbol_inverse_pair() {
    assert_eq!(stdout(&["quantize", "q*p", "--s", "0"]), "Q*P - 1/2*i*hbar");
    assert_eq!(stdout(&["symbol", "Q*P", "--s", "0"]), "q*p + 1/2*i*hbar");
    assert_eq!(stdout(&["symbol", "Ad*A", "--s", "1", "--algebra", "aadag"]), "Zb*Z");
}

#[test]
fn operator_mode_commands() {
    assert_eq!(stdout(&["opmul", "P", "Q"]), "Q*P - i*hbar");
    assert_eq!(stdout(&["adjoint", "Q*P"]), "Q*P - i*hbar");
    assert_eq!(stdout(&["symmetrize", "2", "1"]), "Q^2*P - i*hbar*Q");
    assert_eq!(stdout(&["hermitian", "1", "1", "--alpha", "1"]), "2*Q*P - i*hbar");
}

#[test]
fn bopp_and_generators() {
    assert_eq!(
        stdout(&["bopp", "--basis", "delta", "--side", "l", "--which", "q"]),
        "q + 1/2*i*hbar*s*dp - 1/2*i*hbar*dp"
    );
    assert_eq!(stdout(&["gamma", "1", "0"]), "-i*hbar*dp");
    assert_eq!(stdout(&["tgen", "1", "0"]), "-hbar*eta");
    assert_eq!(stdout(&["bsymbol", "1", "1", "--r", "0", "--s", "0"]), "q*p");
}

#[test]
fn wtable_has_six_rows_at_max_two() {
    let text = stdout(&["wtable", "--max", "2"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("t[")).count(), 6);
    let json = stdout(&["wtable", "--max", "2", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed.as_array().unwrap().len(), 6);
}

#[test]
fn evolve_oscillator() {
    let text = stdout(&["evolve", "(q^2+p^2)*1/2", "q", "2", "--s", "0"]);
    assert_eq!(text, "t^0: q\nt^1: p\nt^2: -1/2*q");
}

#[test]
fn wcheck_passes_and_reports() {
    let out = wwgm(&["wcheck", "1", "0", "0", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("isomorphism PASS"));
    assert!(text.contains("central extension PASS"));
    assert!(text.contains("charge = i*hbar"));
}

#[test]
fn fock_commands() {
    let out = wwgm(&["fock", "gens", "--fock-n", "32"]);
    assert!(out.status.success());
    let json = stdout(&[
        "fock",
        "displacement",
        "--xi",
        "0.1",
        "--eta",
        "0.1",
        "--fock-n",
        "48",
        "--format",
        "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed["pass"], serde_json::Value::Bool(true));

    // an unreasonable tolerance must fail with exit code 1
    let out = wwgm(&[
        "fock", "gens", "--fock-n", "16", "--tol", "1e-30",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_two_with_offset() {
    let out = wwgm(&["quantize", "q^-1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("byte 2"), "stderr: {err}");
    assert!(err.contains("negative exponent"), "stderr: {err}");

    let out = wwgm(&["quantize", "x+1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("unknown symbol"));

    // usage errors from clap itself
    let out = wwgm(&["order", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_file_receives_output() {
    let dir = std::env::temp_dir().join(format!("wwgm-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("result.json");
    let args = [
        "order", "1", "1", "--s", "0", "--format", "json", "--out",
        path.to_str().unwrap(),
    ];
    let printed = stdout(&args);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.trim_end(), printed);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn parse_print_parse_is_fixed_point_through_the_binary() {
    // print symbolically, re-enter the printed form, print again
    let first = stdout(&["order", "2", "2"]);
    let second = stdout(&["opmul", &first, "1"]);
    assert_eq!(first, second);
    let star_out = stdout(&["star", "q^2*p", "p^3 - i*q", "--s", "1/2"]);
    let round = stdout(&["star", &star_out, "1", "--s", "0"]);
    assert_eq!(round, star_out);
}

#[test]
fn degree_cap_flag_is_honored() {
    let out = wwgm(&["opmul", "Q^40", "Q^40"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("degree overflow"));
    let out = wwgm(&["opmul", "Q^40", "Q^40", "--max-degree", "128"]);
    assert!(out.status.success());
}
