//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N ...: PASS|FAIL` line before asserting.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use volterra_radius::families::{extremal, koebe, ClassSpec};
use volterra_radius::radius::{quad_root_oracle, radius_formula, radius_janowski, RadiusQuery};
use volterra_radius::series::PowerSeries;
use volterra_radius::verify::{
    estimate_radius, fn_convexity_radius, lemma_audit, verify_theorem, GridSpec, Lemma, VerifyMode,
};
use volterra_radius::volterra::{j_g_series, m_g_series, t_g_series};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn verdict(name: &str, ok: bool) {
    println!("criterion {name}: {}", if ok { "PASS" } else { "FAIL" });
}

fn grid() -> GridSpec {
    GridSpec::new(720, 512, 0.99, 1e-6).unwrap()
}

fn random_normalized(rng: &mut ChaCha8Rng, order: usize) -> PowerSeries {
    let mut coeffs = vec![Complex64::default(); order + 1];
    coeffs[1] = c(1.0);
    for co in coeffs.iter_mut().skip(2) {
        *co = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    PowerSeries::new(coeffs).unwrap()
}

#[test]
fn criterion_1_operator_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for _ in 0..25 {
        let f = random_normalized(&mut rng, 128);
        let g = random_normalized(&mut rng, 128);
        let lhs = j_g_series(&f, &g).add(&t_g_series(&f, &g));
        let residual = lhs
            .sub(&m_g_series(&f, &g))
            .coeffs()
            .iter()
            .map(|co| co.norm())
            .fold(0.0, f64::max);
        worst = worst.max(residual);
    }
    let ok = worst <= 1e-12;
    verdict("1 (operator identity, 25 pairs at N=128)", ok);
    assert!(ok, "worst residual {worst}");
}

#[test]
fn criterion_2_janowski_corollaries() {
    let exact = radius_janowski(c(2.0), c(1.0), 0.0).unwrap().r == 0.5
        && radius_janowski(c(2.0), c(-1.0), 0.0).unwrap().r == 0.5;

    let mut estimates_ok = true;
    for b in [1.0, -1.0] {
        let q = RadiusQuery::T41 { alpha: 0.0, a: c(2.0), b: c(b) };
        let reports = verify_theorem(&q, &VerifyMode::Extremal, &grid()).unwrap();
        estimates_ok &= reports[0].r_estimate >= 0.5 - 1e-3;
    }

    let mut oracle_ok = true;
    for alpha in [0.0, 0.25, 0.5] {
        let q = RadiusQuery::T41 { alpha, a: c(2.0), b: c(1.0) };
        let formula = radius_formula(&q).unwrap();
        let (c2, c1, c0) = q.proof_polynomial();
        let oracle = quad_root_oracle(c2, c1, c0).unwrap();
        oracle_ok &= (formula.r - oracle.r).abs() <= 1e-10;
    }

    let ok = exact && estimates_ok && oracle_ok;
    verdict("2 (Janowski corollaries and oracle cross-check)", ok);
    assert!(ok, "exact={exact} estimates={estimates_ok} oracle={oracle_ok}");
}

#[test]
fn criterion_3_whole_disc_pair() {
    let f = koebe();
    let g = extremal(&ClassSpec::UniversalLif { gamma: 1.0 }).unwrap();
    let est = estimate_radius(&f, &g, 0.0, &grid()).unwrap();
    let ok = est.reached_cap && est.first_failure.is_none() && est.r >= 0.99 - 1e-9;
    verdict("3 (Koebe with z/(1-z): convex across the tested disc)", ok);
    assert!(ok, "estimate {est:?}");
}

#[test]
fn criterion_4_univalent_pair() {
    let target = 2.0 - 3.0_f64.sqrt();
    let formula = radius_formula(&RadiusQuery::T44 { alpha: 0.0 }).unwrap();
    let formula_ok = (formula.r - target).abs() <= 1e-12;

    let est = estimate_radius(&koebe(), &koebe(), 0.0, &grid()).unwrap();
    let pair_ok = est.r >= target - 1e-3;

    let standalone = fn_convexity_radius(&koebe(), 0.0, &grid()).unwrap();
    let standalone_ok = (standalone.r - target).abs() <= 1e-4;

    let ok = formula_ok && pair_ok && standalone_ok;
    verdict("4 (univalent-pair radius 2-sqrt(3))", ok);
    assert!(
        ok,
        "formula {} pair estimate {} standalone {}",
        formula.r, est.r, standalone.r
    );
}

#[test]
fn criterion_5_half_plane_and_rotation() {
    let t45 = radius_formula(&RadiusQuery::T45 { alpha: 0.0, beta: 1.0 }).unwrap();
    let t46 = radius_formula(&RadiusQuery::T46 { alpha: 0.0, k: 2.0 }).unwrap();
    let exact = t45.r == 0.5 && t46.r == 1.0;

    let mut margins_ok = true;
    for alpha in [0.0, 0.5] {
        for beta in [0.5, 1.0] {
            let q = RadiusQuery::T45 { alpha, beta };
            let reports = verify_theorem(&q, &VerifyMode::Extremal, &grid()).unwrap();
            margins_ok &= reports[0].margin >= -1e-3;
        }
        for k in [2.0, 4.0, 8.0] {
            let q = RadiusQuery::T46 { alpha, k };
            let reports = verify_theorem(&q, &VerifyMode::Extremal, &grid()).unwrap();
            margins_ok &= reports[0].margin >= -1e-3;
        }
    }

    let ok = exact && margins_ok;
    verdict("5 (half-plane and bounded-rotation pairs)", ok);
    assert!(ok, "exact={exact} margins={margins_ok}");
}

#[test]
fn criterion_6_lemma_audits() {
    let audit_grid = GridSpec::new(720, 32, 0.95, 1e-6).unwrap();
    let cases: Vec<(Lemma, volterra_radius::families::AnalyticFn)> = vec![
        (Lemma::L31 { gamma: 1.0 }, extremal(&ClassSpec::UniversalLif { gamma: 1.0 }).unwrap()),
        (Lemma::L31 { gamma: 2.0 }, koebe()),
        (Lemma::L32 { delta: 1.0 }, extremal(&ClassSpec::ConvexOrder { alpha: 0.0 }).unwrap()),
        (Lemma::L33, koebe()),
        (Lemma::L34 { beta: 0.5 }, extremal(&ClassSpec::GBeta { beta: 0.5 }).unwrap()),
        (Lemma::L34 { beta: 1.0 }, extremal(&ClassSpec::GBeta { beta: 1.0 }).unwrap()),
        (Lemma::RobertsonVk { k: 2.0 }, extremal(&ClassSpec::BoundaryRotation { k: 2.0 }).unwrap()),
        (Lemma::RobertsonVk { k: 4.0 }, extremal(&ClassSpec::BoundaryRotation { k: 4.0 }).unwrap()),
    ];
    let mut bounds_ok = true;
    for (lemma, member) in &cases {
        let audit = lemma_audit(member, lemma, &audit_grid).unwrap();
        if audit.max_violation > 1e-8 {
            println!("  {} violated by {}", lemma.label(), audit.max_violation);
            bounds_ok = false;
        }
    }

    // sharpness on the real axis at z = 1/2
    let r = 0.5;
    let z = c(r);
    let ek = koebe().eval(z).unwrap();
    let l33_gap = ((z * ek.d2 / ek.d1 - c(2.0 * r * r / (1.0 - r * r))).norm()
        - 4.0 * r / (1.0 - r * r))
        .abs();
    let eg = extremal(&ClassSpec::GBeta { beta: 1.0 }).unwrap().eval(z).unwrap();
    let l34_gap = ((eg.d2 / eg.d1).norm() - 1.0 / (1.0 - r)).abs();
    let sharp_ok = l33_gap <= 1e-6 && l34_gap <= 1e-6;

    let ok = bounds_ok && sharp_ok;
    verdict("6 (distortion lemma audits and sharpness)", ok);
    assert!(ok, "bounds={bounds_ok} l33_gap={l33_gap} l34_gap={l34_gap}");
}

#[test]
fn criterion_7_sampled_soundness() {
    // r_cap 0.9 keeps series evaluations inside the reliable truncation zone;
    // membership at 0.9 is re-checked inside the sampler.
    let sampled_grid = GridSpec::new(360, 256, 0.9, 1e-6).unwrap();
    let queries = [
        RadiusQuery::T41 { alpha: 0.0, a: c(2.0), b: c(-1.0) },
        RadiusQuery::T42 { alpha: 0.25, gamma: 1.0 },
        RadiusQuery::T45 { alpha: 0.25, beta: 1.0 },
    ];
    let mut ok = true;
    for q in &queries {
        let reports =
            verify_theorem(q, &VerifyMode::Sampled { n: 20, seed: 42 }, &sampled_grid).unwrap();
        assert_eq!(reports.len(), 20);
        for r in &reports {
            if r.margin < -1e-3 || r.first_failure.is_some() {
                println!(
                    "  {} pair {} margin {} first_failure {:?}",
                    r.theorem, r.pair_label, r.margin, r.first_failure
                );
                ok = false;
            }
        }
    }
    verdict("7 (20 sampled pairs per theorem stay sound)", ok);
    assert!(ok);
}

#[test]
fn criterion_8_sweep_determinism() {
    let bin = env!("CARGO_BIN_EXE_volterra-radius");
    let dir = std::env::temp_dir();
    let out1 = dir.join("sweep_det_1.csv");
    let out2 = dir.join("sweep_det_2.csv");
    for out in [&out1, &out2] {
        let status = std::process::Command::new(bin)
            .args([
                "sweep",
                "--theorem",
                "t46",
                "--alpha",
                "0:0.5:0.25",
                "--k",
                "2:8:2",
                "--nradial",
                "128",
                "--ntheta",
                "128",
                "--out",
                out.to_str().unwrap(),
            ])
            .status()
            .unwrap();
        assert!(status.success());
    }
    let b1 = std::fs::read(&out1).unwrap();
    let b2 = std::fs::read(&out2).unwrap();
    let ok = !b1.is_empty() && b1 == b2;
    verdict("8 (sweep output is byte-identical across runs)", ok);
    assert!(ok);
}
