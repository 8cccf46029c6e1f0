//! Property-based invariants for the series arithmetic and the radius
//! formulas.

use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use volterra_radius::families::{extremal, sample_member, AnalyticFn, ClassSpec};
use volterra_radius::radius::{quad_root_oracle, radius_janowski, Branch};
use volterra_radius::series::{log_derivative_functionals, PowerSeries};

const N: usize = 32;

fn series_strategy(max_abs: f64) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec((-max_abs..max_abs, -max_abs..max_abs), N + 1).prop_map(|v| {
        PowerSeries::new(v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect()).unwrap()
    })
}

/// Series with constant term exactly 1, so `log` lands on constant 0.
fn unit_constant_strategy() -> impl Strategy<Value = PowerSeries> {
    series_strategy(0.5).prop_map(|s| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = Complex64::new(1.0, 0.0);
        PowerSeries::new(coeffs).unwrap()
    })
}

fn normalized_strategy() -> impl Strategy<Value = PowerSeries> {
    series_strategy(0.5).prop_map(|s| {
        let mut coeffs = s.coeffs().to_vec();
        coeffs[0] = Complex64::default();
        coeffs[1] = Complex64::new(1.0, 0.0);
        PowerSeries::new(coeffs).unwrap()
    })
}

fn max_coeff_diff(a: &PowerSeries, b: &PowerSeries) -> f64 {
    a.sub(b).coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// The radius proof for the Janowski pair chains two subordination-derived
/// distortion bounds; both must hold pointwise for class members below the
/// closed-form radius.
#[test]
fn janowski_proof_chain_bounds() {
    let cases = [
        (Complex64::new(2.0, 0.0), Complex64::new(1.0, 0.0), 0.0),
        (Complex64::new(2.0, 0.0), Complex64::new(-1.0, 0.0), 0.25),
        (Complex64::new(1.5, 1.0), Complex64::new(0.0, 0.5), 0.5),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (a, b, alpha) in cases {
        let r_c = radius_janowski(a, b, alpha).unwrap().r;
        let members: Vec<(AnalyticFn, AnalyticFn)> = vec![
            (
                extremal(&ClassSpec::janowski_starlike(a, b, false).unwrap()).unwrap(),
                extremal(&ClassSpec::janowski_convex(a, b, false).unwrap()).unwrap(),
            ),
            (
                AnalyticFn::from_series(
                    "sampled starlike",
                    sample_member(&ClassSpec::janowski_starlike(a, b, false).unwrap(), 7).unwrap(),
                ),
                AnalyticFn::from_series(
                    "sampled convex",
                    sample_member(&ClassSpec::janowski_convex(a, b, false).unwrap(), 8).unwrap(),
                ),
            ),
        ];
        for (f, g) in &members {
            for _ in 0..50 {
                let r = rng.gen_range(0.01..r_c.min(0.9));
                let z = Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU));
                let den = 1.0 - b.norm_sqr() * r * r;
                let re_ab = (a * b.conj()).re;

                let ef = f.eval(z).unwrap();
                let starlike_lhs = (z * ef.d1 / ef.value).re - alpha;
                let starlike_rhs = (1.0 - alpha - (b - a).norm() * r
                    - (re_ab - alpha * b.norm_sqr()) * r * r)
                    / den;
                assert!(
                    starlike_lhs >= starlike_rhs - 1e-9,
                    "starlike bound fails at z={z}: {starlike_lhs} < {starlike_rhs}"
                );

                let eg = g.eval(z).unwrap();
                let convex_lhs = (Complex64::new(1.0, 0.0) + z * eg.d2 / eg.d1).re;
                let convex_rhs = (1.0 - (b - a).norm() * r - re_ab * r * r) / den;
                assert!(
                    convex_lhs >= convex_rhs - 1e-9,
                    "convex bound fails at z={z}: {convex_lhs} < {convex_rhs}"
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn mul_commutes(a in series_strategy(1.0), b in series_strategy(1.0)) {
        prop_assert!(max_coeff_diff(&a.mul(&b), &b.mul(&a)) < 1e-12);
    }

    #[test]
    fn mul_associates(
        a in series_strategy(1.0),
        b in series_strategy(1.0),
        c in series_strategy(1.0),
    ) {
        prop_assert!(max_coeff_diff(&a.mul(&b).mul(&c), &a.mul(&b.mul(&c))) < 1e-10);
    }

    #[test]
    fn mul_distributes(
        a in series_strategy(1.0),
        b in series_strategy(1.0),
        c in series_strategy(1.0),
    ) {
        let lhs = a.mul(&b.add(&c));
        let rhs = a.mul(&b).add(&a.mul(&c));
        prop_assert!(max_coeff_diff(&lhs, &rhs) < 1e-12);
    }

    #[test]
    fn exp_log_identity(a in unit_constant_strategy()) {
        let back = a.log().unwrap().exp().unwrap();
        prop_assert!(max_coeff_diff(&a, &back) < 1e-10);
    }

    #[test]
    fn log_exp_identity(b in normalized_strategy()) {
        // exp needs constant 0; zero the linear-term tweak too
        let mut coeffs = b.coeffs().to_vec();
        coeffs[1] = Complex64::new(0.3, -0.1);
        let b = PowerSeries::new(coeffs).unwrap();
        let back = b.exp().unwrap().log().unwrap();
        prop_assert!(max_coeff_diff(&b, &back) < 1e-10);
    }

    #[test]
    fn reciprocal_inverts(a in unit_constant_strategy()) {
        let prod = a.mul(&a.reciprocal().unwrap());
        let one = PowerSeries::constant(Complex64::new(1.0, 0.0), N);
        prop_assert!(max_coeff_diff(&prod, &one) < 1e-10);
    }

    #[test]
    fn derivative_matches_eval(a in series_strategy(1.0), r in 0.0..0.9f64, t in 0.0..6.28f64) {
        let z = Complex64::from_polar(r, t);
        let d = a.differentiate().eval(z).unwrap().value;
        let d1 = a.eval(z).unwrap().d1;
        prop_assert!((d - d1).norm() < 1e-10);
    }

    #[test]
    fn functional_reconstruction_roundtrip(f in normalized_strategy()) {
        let (p, _) = log_derivative_functionals(&f).unwrap();
        let back = volterra_radius::families::from_log_derivative(&p).unwrap();
        // reconstruction drops the top coefficient, so compare below N
        let max = (0..N)
            .map(|n| (f.coeff(n) - back.coeff(n)).norm())
            .fold(0.0, f64::max);
        prop_assert!(max < 1e-10, "max coefficient difference {max}");
    }

    #[test]
    fn oracle_finds_smallest_positive_root(
        c2 in -4.0..4.0f64,
        c1 in -4.0..4.0f64,
        c0 in 0.1..4.0f64,
    ) {
        let v = quad_root_oracle(c2, c1, c0).unwrap();
        let p = |r: f64| c0 + c1 * r + c2 * r * r;
        match v.branch {
            Branch::WholeDisc => {
                // positive on a coarse grid of [0, 1)
                for i in 0..100 {
                    prop_assert!(p(i as f64 / 100.0) > -1e-9);
                }
            }
            _ => {
                prop_assert!(v.r > 0.0 && v.r <= 1.0);
                prop_assert!(p(v.r).abs() < 1e-9, "p({}) = {}", v.r, p(v.r));
                // no earlier crossing
                for i in 1..100 {
                    let r = v.r * i as f64 / 101.0;
                    prop_assert!(p(r) > -1e-9);
                }
            }
        }
    }
}
