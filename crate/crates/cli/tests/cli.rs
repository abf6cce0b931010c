use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use ringel::json::*;
use ringel::CliError;
use ringel_core::rep::{kronecker_preset, KroneckerKind};
use ringel_core::{make_field, Budget, Error};

fn ringel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringel")).arg("--quiet").args(args).output().expect("binary runs")
}

fn ringel_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ringel"))
        .arg("--quiet")
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("every stdout line is JSON"))
        .collect()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn classical_hall_polynomial() {
    let out = ringel(&["hallpoly", "--classical", "[1,1]", "[1]", "[1,1,1]"]);
    assert_eq!(code(&out), 0);
    let v = &stdout_json(&out)[0];
    assert_eq!(v["F"]["poly"], "T^2+T+1");
    assert_eq!(poly_from_json(&v["F"]).unwrap(), ringel_core::RatPoly::from_ints(&[1, 1, 1]));
}

#[test]
fn green_sweep_passes() {
    let out = ringel(&["verify", "--identity", "green", "--quiver", "jordan", "--q", "2", "--max-dim", "3"]);
    assert_eq!(code(&out), 0);
    let lines = stdout_json(&out);
    assert!(!lines.is_empty());
    for l in &lines {
        let r = report_from_json(l).unwrap();
        assert!(r.pass);
    }
}

#[test]
fn other_sweeps_pass() {
    for args in [
        &["verify", "--identity", "assoc", "--quiver", "a2", "--q", "2", "--max-dim", "2"][..],
        &["verify", "--identity", "riedtmann", "--quiver", "kronecker", "--q", "2", "--dims", "[1,2]"],
        &["verify", "--identity", "tables", "--quiver", "a3", "--q", "2", "--max-dim", "1"],
        &["verify", "--identity", "torsion", "--q", "2"],
        &["verify", "--identity", "kronecker", "--q", "3", "--n", "1"],
    ] {
        let out = ringel(args);
        assert_eq!(code(&out), 0, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn example_totals() {
    let out = ringel(&["example", "--q", "3"]);
    assert_eq!(code(&out), 0);
    let v = &stdout_json(&out)[0];
    assert_eq!(v["sum_over_RS"], "25/1");
    assert_eq!(v["sum_over_ST"], "25/1");
    assert_eq!(v["sum_over_RT"], "50/1");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn example_needs_three_points() {
    let out = ringel(&["example", "--q", "2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("field too small"));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(code(&ringel(&["hallpoly", "--classical", "[1,2]", "[1]", "[2,1]"])), 2);
    assert_eq!(code(&ringel(&["classify", "--quiver", "e8", "--dims", "[1]", "--q", "2"])), 2);
    assert_eq!(code(&ringel(&["classify", "--quiver", "jordan", "--dims", "[1]", "--q", "6"])), 2);
    assert_eq!(code(&ringel(&["verify", "--identity", "nope", "--q", "2"])), 2);
    let out = ringel(&["--max-candidates", "10", "classify", "--quiver", "jordan", "--dims", "[3]", "--q", "2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn error_classes_map_to_exit_codes() {
    assert!(matches!(CliError::from(Error::NotUniversal("x".into())), CliError::Failed(_)));
    assert!(matches!(CliError::from(Error::NotPrime(4)), CliError::Input(_)));
    assert!(matches!(
        CliError::from(Error::BudgetExceeded { what: "x", needed: 2, limit: 1 }),
        CliError::Input(_)
    ));
}

#[test]
fn classify_round_trip_into_hall() {
    let out = ringel(&["classify", "--quiver", "kronecker", "--dims", "[1,1]", "--q", "3"]);
    assert_eq!(code(&out), 0);
    let table = &stdout_json(&out)[0];
    let classes = table["classes"].as_array().unwrap();
    // zero maps, then q+1 regular modules of dimension (1,1)
    assert_eq!(classes.len(), 5);
    for c in classes {
        let rep = rep_from_json(&c["rep"], Budget::default()).unwrap();
        assert_eq!(rep_to_json(&rep), c["rep"]);
    }
    // a regular R contains P_0 with quotient I_0 exactly once
    let r = classes.iter().find(|c| c["aut"] == "2").unwrap()["rep"].to_string();
    let f = make_field(3, 1).unwrap();
    let i0 = rep_to_json(&kronecker_preset(KroneckerKind::I, 0, &f).unwrap()).to_string();
    let p0 = rep_to_json(&kronecker_preset(KroneckerKind::P, 0, &f).unwrap()).to_string();
    let out = ringel_stdin(&["hall", &i0, &p0, "-"], &r);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = &stdout_json(&out)[0];
    assert_eq!(v["F"], "1");
    assert_eq!(v["P"], "4");
}

#[test]
fn grassmannian_of_p2() {
    let f = make_field(2, 1).unwrap();
    let p2 = rep_to_json(&kronecker_preset(KroneckerKind::P, 2, &f).unwrap()).to_string();
    let dir = std::env::temp_dir().join(format!("ringel-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p2.json");
    std::fs::write(&path, &p2).unwrap();
    let out = ringel(&["grassmannian", path.to_str().unwrap(), "--dims", "[0,1]"]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)[0]["count"], "7");
}

#[test]
fn segre_and_decomp_round_trip() {
    let out = ringel(&["segre", "[[[1],1]]", "[[[1],1]]", "[[[1,1],1]]", "--check-q", "2"]);
    assert_eq!(code(&out), 0);
    let lines = stdout_json(&out);
    assert_eq!(lines[0]["F"]["poly"], "T+1");
    for key in ["rho", "sigma", "tau"] {
        let s = segre_from_json(&lines[0][key]).unwrap();
        assert_eq!(segre_to_json(&s), lines[0][key]);
    }
    assert!(lines[1..].iter().all(|l| report_from_json(l).unwrap().pass));

    let out = ringel(&["decomp", r#"{"regular":[[[2],1]]}"#, r#"{"P":[0]}"#, r#"{"P":[2]}"#]);
    assert_eq!(code(&out), 0);
    let v = &stdout_json(&out)[0];
    assert_eq!(v["F"]["poly"], "T+1");
    for key in ["alpha", "beta", "gamma"] {
        assert_eq!(decomp_to_json(&decomp_from_json(&v[key]).unwrap()), v[key]);
    }
}

#[test]
fn discrete_classes_round_trip() {
    let mu = r#"{"quiver":"a2","labels":[{"root":[1,0]}]}"#;
    let nu = r#"{"quiver":"a2","labels":[{"root":[0,1]}]}"#;
    let xi = r#"{"quiver":"a2","labels":[{"root":[1,1]}]}"#;
    let out = ringel(&["hallpoly", "--discrete", mu, nu, xi]);
    let v = &stdout_json(&out)[0];
    assert_eq!(code(&out), 0);
    for key in ["mu", "nu", "xi"] {
        assert_eq!(discrete_to_json(&discrete_from_json(&v[key]).unwrap()), v[key]);
    }
    assert_eq!(v["integer"], true);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--identity", "assoc", "--quiver", "jordan", "--q", "2", "--max-dim", "3"];
    let (a, b) = (ringel(&args), ringel(&args));
    assert_eq!(a.stdout, b.stdout);
    let args = ["classify", "--quiver", "a2", "--dims", "[2,1]", "--q", "3"];
    assert_eq!(ringel(&args).stdout, ringel(&args).stdout);
}

#[test]
fn quiet_suppresses_logs() {
    let out = ringel(&["example", "--q", "3"]);
    assert!(out.stderr.is_empty());
    let loud = Command::new(env!("CARGO_BIN_EXE_ringel")).args(["example", "--q", "3"]).output().unwrap();
    assert!(!loud.stderr.is_empty());
    assert_eq!(loud.stdout, out.stdout);
}

#[test]
fn custom_quiver_json() {
    let q = r#"{"vertices":2,"arrows":[[0,1]]}"#;
    let out = ringel(&["classify", "--quiver", q, "--dims", "[1,1]", "--q", "2"]);
    assert_eq!(code(&out), 0);
    let v = &stdout_json(&out)[0];
    assert_eq!(v["classes"].as_array().unwrap().len(), 2);
    assert_eq!(quiver_to_json(&quiver_from_json(&v["quiver"]).unwrap()), v["quiver"]);
}
