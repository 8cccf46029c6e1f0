//! End-to-end checks of the command-line binary: output shapes, closed-form
//! values, exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_volterra-radius"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn radius_prints_closed_forms() {
    let o = run(&["radius", "--theorem", "t44", "--alpha", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "r=0.2679491924 branch=quadratic\n");

    let o = run(&["radius", "--theorem", "t45", "--alpha", "0", "--beta", "1"]);
    assert_eq!(stdout(&o), "r=0.5 branch=linear\n");

    let o = run(&["radius", "--theorem", "t46", "--alpha", "0", "--k", "2"]);
    assert_eq!(stdout(&o), "r=1 branch=whole-disc\n");

    let o = run(&["radius", "--theorem", "t41", "--alpha", "0", "--A", "2,0", "--B", "0,0"]);
    assert_eq!(stdout(&o), "r=0.5 branch=linear\n");

    let o = run(&["radius", "--theorem", "t41", "--alpha", "0", "--A", "2,0", "--B", "1,0"]);
    assert_eq!(stdout(&o), "r=0.5 branch=quadratic\n");

    let o = run(&["radius", "--theorem", "t43", "--alpha", "0.5"]);
    assert_eq!(stdout(&o), "r=1 branch=whole-disc\n");
}

#[test]
fn usage_errors_exit_2() {
    // unknown theorem id
    let o = run(&["radius", "--theorem", "t99"]);
    assert_eq!(o.status.code(), Some(2));

    // missing required parameter
    let o = run(&["radius", "--theorem", "t42", "--alpha", "0"]);
    assert_eq!(o.status.code(), Some(2));

    // out-of-domain parameter
    let o = run(&["radius", "--theorem", "t44", "--alpha", "1.5"]);
    assert_eq!(o.status.code(), Some(2));

    // malformed complex literal
    let o = run(&["radius", "--theorem", "t41", "--A", "2"]);
    assert_eq!(o.status.code(), Some(2));

    // unknown flag
    let o = run(&["radius", "--theorem", "t44", "--frob", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "--help"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_identity_reports_residuals() {
    let o = run(&["verify", "--identity", "--n", "5", "--order", "64"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("pair,order_N,seed,max_residual"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn verify_lemmas_passes() {
    let o = run(&["verify", "--lemmas"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("lemma,member,max_violation,argmax_re,argmax_im\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn verify_theorem_extremal_csv() {
    let o = run(&[
        "verify", "--theorem", "t44", "--alpha", "0", "--ntheta", "128", "--nradial", "128",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("theorem,alpha,"));
    let row = lines.next().unwrap();
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields[0], "t44");
    let r_formula: f64 = fields[9].parse().unwrap();
    assert!((r_formula - (2.0 - 3.0_f64.sqrt())).abs() < 1e-12);
}

#[test]
fn verify_theorem_json_format() {
    let o = run(&[
        "verify", "--theorem", "t45", "--alpha", "0", "--beta", "1", "--format", "json",
        "--ntheta", "128", "--nradial", "128",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["theorem"], "t45");
    assert!((reports[0]["r_formula"].as_f64().unwrap() - 0.5).abs() < 1e-15);
}

#[test]
fn sweep_emits_one_row_per_point() {
    let o = run(&[
        "sweep", "--theorem", "t45", "--alpha", "0:0.5:0.25", "--beta", "0.5:1:0.5",
        "--ntheta", "128", "--nradial", "128",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    // header + 3 alphas x 2 betas
    assert_eq!(text.lines().count(), 7);

    // empty range: header only
    let o = run(&["sweep", "--theorem", "t44", "--alpha", "0.5:0.1:0.25"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);
}
