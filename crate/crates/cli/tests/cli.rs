use std::io::Write;
use std::process::{Command, Output, Stdio};

use polymat_core::fixtures;
use serde_json::Value;

fn polymat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polymat")).args(args).env_remove("POLYMAT_BUDGET").output().unwrap()
}

fn polymat_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_polymat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn holds(report: &Value, check: &str) -> bool {
    report["checks"][check]["holds"].as_bool().unwrap_or_else(|| panic!("{check}: {report}"))
}

#[test]
fn prime_sums_example_is_polymatroidal_and_gcm() {
    let out = polymat(&["--json", "check", "-e", fixtures::GCM_VIA_PRIME_SUMS.text, "--polymatroidal", "--gcm"]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["schema"], "polymat.report/1");
    assert!(holds(&r, "polymatroidal"));
    assert!(holds(&r, "gcm"));
}

#[test]
fn mixed_connected_example_is_connected_but_mixed() {
    let out = polymat(&["--json", "check", "-e", fixtures::MIXED_CONNECTED.text, "--checks", "codim1,unmixed"]);
    let r = json(&out);
    assert!(holds(&r, "codim1"));
    assert!(!holds(&r, "unmixed"));
}

#[test]
fn square_of_maximal_ideal_passes_everything_but_matroidal() {
    let out = polymat(&["--json", "check", "-e", "vars x,y,z\n(x^2, x*y, x*z, y^2, y*z, z^2)", "--checks", "all"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    for (name, v) in r["checks"].as_object().unwrap() {
        let expected = name != "matroidal";
        assert_eq!(v["holds"].as_bool(), Some(expected), "{name}: {v}");
    }
    assert!(r["checks"].as_object().unwrap().len() >= 9);
}

#[test]
fn fixtures_round_trip_through_parse() {
    for f in fixtures::ALL.iter() {
        let first = polymat(&["parse", "-e", f.text]);
        assert!(first.status.success(), "{}", f.name);
        let text = String::from_utf8(first.stdout).unwrap();
        let second = polymat(&["parse", "-e", &text]);
        assert_eq!(String::from_utf8(second.stdout).unwrap(), text, "{}", f.name);
        assert_eq!(polymat_core::text::parse_ideal(&text).unwrap().ideal, f.ideal(), "{}", f.name);
    }
}

#[test]
fn input_from_stdin_and_file() {
    let out = polymat_stdin(&["--json", "check", "-", "--unmixed"], fixtures::UNMIXED_MATROIDAL_NOT_GCM.text);
    assert!(holds(&json(&out), "unmixed"));

    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(fixtures::UNMIXED_MATROIDAL_NOT_GCM.text.as_bytes()).unwrap();
    let out = polymat(&["--json", "check", file.path().to_str().unwrap(), "--gcm"]);
    let r = json(&out);
    assert!(!holds(&r, "gcm"));
    assert!(r["checks"]["gcm"]["witness"].is_object(), "{r}");
}

#[test]
fn unknown_check_is_a_usage_error() {
    let out = polymat(&["check", "-e", "(x1)", "--checks", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bogus"));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let out = polymat(&["parse", "-e", "(x1*, x2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let ok = polymat(&["--json", "verify", "--suite", "pc", "--n", "3", "--d", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    let r = json(&ok);
    assert_eq!(r["report"]["counterexamples"].as_array().unwrap().len(), 0);

    let tight = polymat(&["verify", "--suite", "pc", "--budget", "5"]);
    assert_eq!(tight.status.code(), Some(3));

    let via_env = Command::new(env!("CARGO_BIN_EXE_polymat"))
        .args(["verify", "--suite", "pc"])
        .env("POLYMAT_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(via_env.status.code(), Some(3));

    let unknown = polymat(&["verify", "--suite", "nope"]);
    assert_eq!(unknown.status.code(), Some(1));
}

#[test]
fn decompose_and_localize() {
    let out = polymat(&["--json", "decompose", "-e", fixtures::EQUIDIM_NOT_UNMIXED.text]);
    assert!(out.status.success());
    let r = json(&out);
    let exps: Vec<u64> = r["components"].as_array().unwrap().iter().map(|c| c["exponent"].as_u64().unwrap()).collect();
    assert_eq!(exps, [1, 1, 2]);

    let out = polymat(&["localize", "-e", "vars x1,x2,x3\n(x1*x2, x2*x3)", "--kill", "x2"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("(x1, x3)"), "{}", String::from_utf8_lossy(&out.stdout));
}
