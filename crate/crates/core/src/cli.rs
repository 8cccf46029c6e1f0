//! Command-line surface: `radius` (closed forms), `verify` (numeric
//! certification, operator identity, lemma audits) and `sweep` (parameter
//! grids to CSV). Exit codes: 0 success, 1 verification failure, 2 usage or
//! configuration error.

use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::{extremal, koebe, ClassSpec};
use crate::radius::{radius_formula, Branch, RadiusQuery};
use crate::series::PowerSeries;
use crate::verify::{
    lemma_audit, verify_theorem, GridSpec, Lemma, RadiusReport, VerifyMode, TOL_ACCEPT,
};
use crate::volterra::{j_g_series, m_g_series, t_g_series};

const EXIT_OK: i32 = 0;
const EXIT_VERIFY_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "volterra-radius", version, about = "Radius of convexity of the Volterra-type integral operator")]
struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

/// Run configuration shared by all subcommands.
#[derive(Debug, Args)]
struct ConfigArgs {
    /// RNG seed for sampled members and random pairs.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Truncation order for series built by this run.
    #[arg(long, global = true, default_value_t = 256)]
    order: usize,
    /// Angular samples per circle.
    #[arg(long, global = true, default_value_t = 720)]
    ntheta: usize,
    /// Radial scan steps.
    #[arg(long, global = true, default_value_t = 512)]
    nradial: usize,
    /// Largest radius probed.
    #[arg(long, global = true, default_value_t = 0.99)]
    rcap: f64,
    /// Bisection tolerance in r.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol: f64,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    out: Option<String>,
    /// Output format.
    #[arg(long, global = true, default_value = "csv", value_parser = ["csv", "json"])]
    format: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the closed-form radius for a theorem.
    Radius(TheoremArgs),
    /// Certify a theorem numerically, or audit the operator identity / lemmas.
    Verify(VerifyArgs),
    /// Sweep parameter ranges and emit one CSV row per point.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct TheoremArgs {
    /// Theorem id: t41..t46.
    #[arg(long)]
    theorem: String,
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    /// Complex A as re,im.
    #[arg(long = "A", value_parser = parse_complex)]
    a: Option<Complex64>,
    /// Complex B as re,im.
    #[arg(long = "B", value_parser = parse_complex)]
    b: Option<Complex64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    k: Option<f64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Theorem id: t41..t46.
    #[arg(long, conflicts_with_all = ["identity", "lemmas"])]
    theorem: Option<String>,
    /// Check the operator identity J_g f + T_g f = f g on random pairs.
    #[arg(long)]
    identity: bool,
    /// Audit the distortion lemma bounds on their designated members.
    #[arg(long)]
    lemmas: bool,
    /// Pair construction for --theorem.
    #[arg(long, default_value = "extremal", value_parser = ["extremal", "sampled"])]
    mode: String,
    /// Number of pairs (sampled mode and --identity).
    #[arg(long, default_value_t = 25)]
    n: usize,
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    #[arg(long = "A", value_parser = parse_complex)]
    a: Option<Complex64>,
    #[arg(long = "B", value_parser = parse_complex)]
    b: Option<Complex64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long)]
    k: Option<f64>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Theorem id: t41..t46.
    #[arg(long)]
    theorem: String,
    /// Range start:stop:step, or a single value.
    #[arg(long, value_parser = parse_range, default_value = "0")]
    alpha: RangeArg,
    #[arg(long = "A", value_parser = parse_complex)]
    a: Option<Complex64>,
    #[arg(long = "B", value_parser = parse_complex)]
    b: Option<Complex64>,
    #[arg(long, value_parser = parse_range)]
    gamma: Option<RangeArg>,
    #[arg(long, value_parser = parse_range)]
    beta: Option<RangeArg>,
    #[arg(long, value_parser = parse_range)]
    k: Option<RangeArg>,
}

/// A list of parameter values from a `start:stop:step` flag.
#[derive(Debug, Clone)]
struct RangeArg(Vec<f64>);

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected re,im, got {s:?}"));
    }
    let re: f64 = parts[0].trim().parse().map_err(|e| format!("bad real part: {e}"))?;
    let im: f64 = parts[1].trim().parse().map_err(|e| format!("bad imaginary part: {e}"))?;
    Ok(Complex64::new(re, im))
}

fn parse_range(s: &str) -> Result<RangeArg, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.len() {
        1 => Ok(RangeArg(vec![parts[0].trim().parse().map_err(|e| format!("bad value: {e}"))?])),
        3 => {
            let start: f64 = parts[0].trim().parse().map_err(|e| format!("bad start: {e}"))?;
            let stop: f64 = parts[1].trim().parse().map_err(|e| format!("bad stop: {e}"))?;
            let step: f64 = parts[2].trim().parse().map_err(|e| format!("bad step: {e}"))?;
            if step <= 0.0 {
                return Err(format!("step must be positive, got {step}"));
            }
            let mut out = Vec::new();
            let mut i = 0;
            loop {
                let v = start + step * i as f64;
                if v > stop + 1e-12 {
                    break;
                }
                out.push(v);
                i += 1;
            }
            Ok(RangeArg(out))
        }
        _ => Err(format!("expected start:stop:step or a single value, got {s:?}")),
    }
}

fn build_query(
    theorem: &str,
    alpha: f64,
    a: Option<Complex64>,
    b: Option<Complex64>,
    gamma: Option<f64>,
    beta: Option<f64>,
    k: Option<f64>,
) -> Result<RadiusQuery, String> {
    Ok(match theorem {
        "t41" => RadiusQuery::T41 {
            alpha,
            a: a.ok_or("t41 requires --A re,im")?,
            b: b.unwrap_or_default(),
        },
        "t42" => RadiusQuery::T42 { alpha, gamma: gamma.ok_or("t42 requires --gamma")? },
        "t43" => RadiusQuery::T43 { alpha },
        "t44" => RadiusQuery::T44 { alpha },
        "t45" => RadiusQuery::T45 { alpha, beta: beta.ok_or("t45 requires --beta")? },
        "t46" => RadiusQuery::T46 { alpha, k: k.ok_or("t46 requires --k")? },
        other => return Err(format!("unknown theorem {other:?}, expected t41..t46")),
    })
}

impl ConfigArgs {
    fn grid(&self) -> crate::Result<GridSpec> {
        GridSpec::new(self.ntheta, self.nradial, self.rcap, self.tol)
    }
}

struct Output {
    path: Option<String>,
    buffer: String,
}

impl Output {
    fn new(path: Option<String>) -> Self {
        Self { path, buffer: String::new() }
    }

    fn line(&mut self, s: &str) {
        self.buffer.push_str(s);
        self.buffer.push('\n');
    }

    fn flush(self) -> std::io::Result<()> {
        match self.path {
            Some(p) => fs::write(p, self.buffer),
            None => std::io::stdout().write_all(self.buffer.as_bytes()),
        }
    }
}

pub const REPORT_CSV_HEADER: &str = "theorem,alpha,A_re,A_im,B_re,B_im,gamma,beta,k,r_formula,r_estimate,margin,worst_angle,n_theta,order_N,seed";

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn report_csv_row(r: &RadiusReport, order: usize) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.theorem,
        r.alpha,
        opt(r.a.map(|a| a[0])),
        opt(r.a.map(|a| a[1])),
        opt(r.b.map(|b| b[0])),
        opt(r.b.map(|b| b[1])),
        opt(r.gamma),
        opt(r.beta),
        opt(r.k),
        r.r_formula,
        r.r_estimate,
        r.margin,
        r.worst_angle,
        r.grid.n_theta,
        order,
        r.seed
    )
}

fn trim_float(x: f64) -> String {
    let rounded = (x * 1e10).round() / 1e10;
    format!("{rounded}")
}

/// Parses `args` (excluding the program name is fine for clap) and runs.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version as "errors" with exit 0
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, String> {
    match &cli.command {
        Command::Radius(args) => cmd_radius(args),
        Command::Verify(args) => cmd_verify(&cli.config, args),
        Command::Sweep(args) => cmd_sweep(&cli.config, args),
    }
}

fn cmd_radius(args: &TheoremArgs) -> Result<i32, String> {
    let q = build_query(&args.theorem, args.alpha, args.a, args.b, args.gamma, args.beta, args.k)?;
    let v = radius_formula(&q).map_err(|e| e.to_string())?;
    let branch = match v.branch {
        Branch::Quadratic => "quadratic",
        Branch::Linear => "linear",
        Branch::WholeDisc => "whole-disc",
    };
    println!("r={} branch={branch}", trim_float(v.r));
    Ok(EXIT_OK)
}

fn cmd_verify(config: &ConfigArgs, args: &VerifyArgs) -> Result<i32, String> {
    if args.identity {
        return cmd_verify_identity(config, args.n);
    }
    if args.lemmas {
        return cmd_verify_lemmas(config);
    }
    let Some(theorem) = &args.theorem else {
        return Err("verify requires --theorem, --identity or --lemmas".to_string());
    };
    let q = build_query(theorem, args.alpha, args.a, args.b, args.gamma, args.beta, args.k)?;
    let mode = match args.mode.as_str() {
        "extremal" => VerifyMode::Extremal,
        _ => VerifyMode::Sampled { n: args.n, seed: config.seed },
    };
    let grid = config.grid().map_err(|e| e.to_string())?;
    let reports = verify_theorem(&q, &mode, &grid).map_err(|e| e.to_string())?;

    let mut out = Output::new(config.out.clone());
    if config.format == "json" {
        out.line(&serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?);
    } else {
        out.line(REPORT_CSV_HEADER);
        for r in &reports {
            out.line(&report_csv_row(r, config.order));
        }
    }
    out.flush().map_err(|e| e.to_string())?;
    let ok = reports.iter().all(|r| r.margin >= -TOL_ACCEPT && r.first_failure.is_none());
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn random_normalized(rng: &mut ChaCha8Rng, order: usize) -> PowerSeries {
    let mut coeffs = vec![Complex64::default(); order + 1];
    coeffs[1] = Complex64::new(1.0, 0.0);
    for c in coeffs.iter_mut().skip(2) {
        *c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    PowerSeries::new(coeffs).expect("order >= 8")
}

fn cmd_verify_identity(config: &ConfigArgs, n: usize) -> Result<i32, String> {
    let order = config.order.max(crate::series::MIN_ORDER);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Output::new(config.out.clone());
    out.line("pair,order_N,seed,max_residual");
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let f = random_normalized(&mut rng, order);
        let g = random_normalized(&mut rng, order);
        let lhs = j_g_series(&f, &g).add(&t_g_series(&f, &g));
        let residual = lhs
            .sub(&m_g_series(&f, &g))
            .coeffs()
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        worst = worst.max(residual);
        out.line(&format!("{i},{order},{},{residual:e}", config.seed));
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(if worst <= 1e-12 { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_verify_lemmas(config: &ConfigArgs) -> Result<i32, String> {
    let grid = GridSpec { r_cap: 0.95, ..GridSpec::membership() };
    let convex = extremal(&ClassSpec::ConvexOrder { alpha: 0.0 }).map_err(|e| e.to_string())?;
    let gbeta = extremal(&ClassSpec::GBeta { beta: 1.0 }).map_err(|e| e.to_string())?;
    let vk = extremal(&ClassSpec::BoundaryRotation { k: 4.0 }).map_err(|e| e.to_string())?;
    let cases = [
        (Lemma::L31 { gamma: 2.0 }, koebe()),
        (Lemma::L32 { delta: 1.0 }, convex),
        (Lemma::L33, koebe()),
        (Lemma::L34 { beta: 1.0 }, gbeta),
        (Lemma::RobertsonVk { k: 4.0 }, vk),
    ];
    let mut out = Output::new(config.out.clone());
    out.line("lemma,member,max_violation,argmax_re,argmax_im");
    let mut worst = f64::NEG_INFINITY;
    for (lemma, member) in &cases {
        let audit = lemma_audit(member, lemma, &grid).map_err(|e| e.to_string())?;
        worst = worst.max(audit.max_violation);
        out.line(&format!(
            "{},{},{:e},{},{}",
            lemma.label(),
            member.label(),
            audit.max_violation,
            audit.argmax.re,
            audit.argmax.im
        ));
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(if worst <= 1e-8 { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_sweep(config: &ConfigArgs, args: &SweepArgs) -> Result<i32, String> {
    let grid = config.grid().map_err(|e| e.to_string())?;
    let one = RangeArg(vec![f64::NAN]); // placeholder for parameters a theorem ignores
    let (gammas, betas, ks) = (
        args.gamma.clone().unwrap_or_else(|| one.clone()).0,
        args.beta.clone().unwrap_or_else(|| one.clone()).0,
        args.k.clone().unwrap_or_else(|| one.clone()).0,
    );
    let mut out = Output::new(config.out.clone());
    out.line(REPORT_CSV_HEADER);
    for &alpha in &args.alpha.0 {
        for &gamma in &gammas {
            for &beta in &betas {
                for &k in &ks {
                    let q = build_query(
                        &args.theorem,
                        alpha,
                        args.a,
                        args.b,
                        if gamma.is_nan() { None } else { Some(gamma) },
                        if beta.is_nan() { None } else { Some(beta) },
                        if k.is_nan() { None } else { Some(k) },
                    )?;
                    let reports =
                        verify_theorem(&q, &VerifyMode::Extremal, &grid).map_err(|e| e.to_string())?;
                    for r in &reports {
                        out.line(&report_csv_row(r, config.order));
                    }
                }
            }
        }
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(EXIT_OK)
}
