//! The integral operators `T_g`, `J_g` and the multiplication operator `M_g`,
//! in truncated-series form and in closed-form evaluator form, together with
//! the convexity functional of `T_g`.
//!
//! For normalized `f`, `g` the three are tied by `J_g f + T_g f = f g`, and
//! the convexity functional splits as
//!
//! ```text
//! 1 + z T''/T' = z f'/f + z g''/g' + 1
//! ```
//!
//! which is what every radius theorem in [`crate::radius`] bounds from below.

use num_complex::Complex64;
use once_cell::sync::Lazy;

use crate::families::AnalyticFn;
use crate::series::{EvalResult, PowerSeries};
use crate::{Error, Result};

const POLE_TOL: f64 = 1e-12;

/// 32-node Gauss-Legendre rule on [0, 1], (node, weight) pairs.
static GAUSS_LEGENDRE_32: Lazy<Vec<(f64, f64)>> = Lazy::new(|| legendre_rule(32));

/// Nodes and weights via Newton iteration on the Legendre polynomial,
/// shifted from [-1, 1] to [0, 1].
fn legendre_rule(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        // Chebyshev-style initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_eval(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_eval(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.push(((x + 1.0) / 2.0, w / 2.0));
    }
    rule.sort_by(|a, b| a.0.total_cmp(&b.0));
    rule
}

/// Legendre polynomial `P_n(x)` and its derivative by the three-term recurrence.
fn legendre_eval(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// `∫_0^z h(s) ds` along the straight segment, 32-node Gauss-Legendre.
pub fn integrate_segment(h: impl Fn(Complex64) -> Complex64, z: Complex64) -> Complex64 {
    let mut acc = Complex64::default();
    for &(t, w) in GAUSS_LEGENDRE_32.iter() {
        acc += w * h(t * z);
    }
    acc * z
}

/// `T_g f = ∫_0^z f g'` in series form.
pub fn t_g_series(f: &PowerSeries, g: &PowerSeries) -> PowerSeries {
    f.mul(&g.differentiate()).integrate()
}

/// `J_g f = ∫_0^z f' g` in series form.
pub fn j_g_series(f: &PowerSeries, g: &PowerSeries) -> PowerSeries {
    f.differentiate().mul(g).integrate()
}

/// `M_g f = f g` in series form. For non-normalized inputs the operator
/// identity picks up the correction term `f(0) g(0)`.
pub fn m_g_series(f: &PowerSeries, g: &PowerSeries) -> PowerSeries {
    f.mul(g)
}

/// Evaluator form of `T_g f`: derivatives are exact products, the value is
/// recovered by quadrature along `[0, z]`.
pub fn t_g(f: &AnalyticFn, g: &AnalyticFn) -> AnalyticFn {
    let (f, g) = (f.clone(), g.clone());
    let r_max = f.r_max().min(g.r_max());
    let label = format!("T[{}]({})", g.label(), f.label());
    AnalyticFn::closed(label, r_max, move |z| {
        let (ef, eg) = (f.eval_raw(z), g.eval_raw(z));
        EvalResult {
            value: integrate_segment(|s| f.eval_raw(s).value * g.eval_raw(s).d1, z),
            d1: ef.value * eg.d1,
            d2: ef.d1 * eg.d1 + ef.value * eg.d2,
            tail: ef.tail + eg.tail,
        }
    })
}

/// Evaluator form of `J_g f`.
pub fn j_g(f: &AnalyticFn, g: &AnalyticFn) -> AnalyticFn {
    let (f, g) = (f.clone(), g.clone());
    let r_max = f.r_max().min(g.r_max());
    let label = format!("J[{}]({})", g.label(), f.label());
    AnalyticFn::closed(label, r_max, move |z| {
        let (ef, eg) = (f.eval_raw(z), g.eval_raw(z));
        EvalResult {
            value: integrate_segment(|s| f.eval_raw(s).d1 * g.eval_raw(s).value, z),
            d1: ef.d1 * eg.value,
            d2: ef.d2 * eg.value + ef.d1 * eg.d1,
            tail: ef.tail + eg.tail,
        }
    })
}

/// The convexity functional `q_T(z) = z f'/f + z g''/g' + 1` of `T_g f`.
///
/// For normalized `f` both summands extend analytically through the origin
/// with value 1, so `q_T(0) = 2`.
pub fn convexity_functional_t(f: &AnalyticFn, g: &AnalyticFn, z: Complex64) -> Result<Complex64> {
    if z.norm() < 1e-9 {
        return Ok(Complex64::new(2.0, 0.0));
    }
    let ef = f.eval(z)?;
    let eg = g.eval(z)?;
    if ef.value.norm() < POLE_TOL || eg.d1.norm() < POLE_TOL {
        return Err(Error::PoleAtEvaluationPoint { z });
    }
    Ok(z * ef.d1 / ef.value + z * eg.d2 / eg.d1 + Complex64::new(1.0, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{extremal, koebe, sample_member, AnalyticFn, ClassSpec};
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn quadrature_rule_sanity() {
        // exact for polynomials up to degree 63; check a few moments
        for k in [0usize, 1, 5, 20, 63] {
            let v = integrate_segment(|s| s.powu(k as u32), c(1.0));
            assert_abs_diff_eq!(v.re, 1.0 / (k + 1) as f64, epsilon = 1e-13);
        }
    }

    #[test]
    fn t_of_identity_pair() {
        let z = PowerSeries::var(16);
        let t = t_g_series(&z, &z);
        assert_abs_diff_eq!(t.coeff(2).re, 0.5, epsilon = 1e-15);
        for n in (0..=16).filter(|&n| n != 2) {
            assert!(t.coeff(n).norm() < 1e-15);
        }
    }

    #[test]
    fn t_koebe_with_identity_g() {
        // f = Koebe, g = z: T = sum n z^{n+1}/(n+1)
        let f = PowerSeries::new((0..=64).map(|n| c(n as f64)).collect()).unwrap();
        let t = t_g_series(&f, &PowerSeries::var(64));
        for n in 1..=63 {
            assert_abs_diff_eq!(
                t.coeff(n + 1).re,
                n as f64 / (n + 1) as f64,
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn j_examples() {
        let z = PowerSeries::var(16);
        let j = j_g_series(&z, &z);
        assert_abs_diff_eq!(j.coeff(2).re, 0.5, epsilon = 1e-15);
        // f = z^2, g = z -> 2 z^3 / 3
        let z2 = z.mul(&z);
        let j = j_g_series(&z2, &z);
        assert_abs_diff_eq!(j.coeff(3).re, 2.0 / 3.0, epsilon = 1e-15);
    }

    fn random_normalized(rng: &mut ChaCha8Rng, order: usize) -> PowerSeries {
        let mut coeffs = vec![Complex64::default(); order + 1];
        coeffs[1] = c(1.0);
        for c in coeffs.iter_mut().skip(2) {
            *c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        PowerSeries::new(coeffs).unwrap()
    }

    #[test]
    fn operator_identity_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10 {
            let f = random_normalized(&mut rng, 128);
            let g = random_normalized(&mut rng, 128);
            let lhs = j_g_series(&f, &g).add(&t_g_series(&f, &g));
            let rhs = m_g_series(&f, &g);
            let max = lhs
                .sub(&rhs)
                .coeffs()
                .iter()
                .map(|c| c.norm())
                .fold(0.0, f64::max);
            assert!(max <= 1e-12, "residual {max}");
        }
    }

    #[test]
    fn t_series_third_coefficient_via_identity() {
        // f = g = z/(1-z): coefficient of z^3 in T equals that of fg minus J
        let f = PowerSeries::var(64).mul(&PowerSeries::from_real(&[1.0, -1.0], 64).reciprocal().unwrap());
        let t = t_g_series(&f, &f);
        let expect = m_g_series(&f, &f).sub(&j_g_series(&f, &f));
        assert_abs_diff_eq!((t.coeff(3) - expect.coeff(3)).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn linearity_in_f() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f1 = random_normalized(&mut rng, 32);
        let f2 = random_normalized(&mut rng, 32);
        let g = random_normalized(&mut rng, 32);
        let (a, b) = (Complex64::new(1.5, -0.5), Complex64::new(-0.25, 2.0));
        let lhs = t_g_series(&f1.scale(a).add(&f2.scale(b)), &g);
        let rhs = t_g_series(&f1, &g).scale(a).add(&t_g_series(&f2, &g).scale(b));
        let max = lhs.sub(&rhs).coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
        assert!(max <= 1e-13);
    }

    #[test]
    fn functional_identity_pair() {
        // f = g = z -> q_T = 2
        let id = AnalyticFn::identity();
        let q = convexity_functional_t(&id, &id, c(0.37)).unwrap();
        assert_abs_diff_eq!((q - c(2.0)).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn functional_koebe_identity_pair() {
        // f = Koebe, g = z, z = 0.5: (1+z)/(1-z) + 0 + 1 = 4
        let q = convexity_functional_t(&koebe(), &AnalyticFn::identity(), c(0.5)).unwrap();
        assert_abs_diff_eq!((q - c(4.0)).norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn functional_matches_direct_t_derivatives() {
        let f = extremal(&ClassSpec::StarlikeOrder { alpha: 0.25 }).unwrap();
        let g = extremal(&ClassSpec::GBeta { beta: 1.0 }).unwrap();
        let t = t_g(&f, &g);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let z = Complex64::from_polar(0.9 * rng.gen::<f64>().sqrt(), rng.gen_range(0.0..6.28));
            if z.norm() < 1e-3 {
                continue;
            }
            let e = t.eval(z).unwrap();
            let direct = Complex64::new(1.0, 0.0) + z * e.d2 / e.d1;
            let q = convexity_functional_t(&f, &g, z).unwrap();
            assert_abs_diff_eq!((direct - q).norm(), 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn series_and_evaluator_paths_agree() {
        let spec = ClassSpec::StarlikeOrder { alpha: 0.0 };
        let fs = sample_member(&spec, 17).unwrap();
        let gs = sample_member(&ClassSpec::ConvexOrder { alpha: 0.0 }, 18).unwrap();
        let t_series = t_g_series(&fs, &gs);
        let t_eval = t_g(
            &AnalyticFn::from_series("f", fs),
            &AnalyticFn::from_series("g", gs),
        );
        for j in 0..12 {
            let z = Complex64::from_polar(0.9 * (j + 1) as f64 / 12.0, 0.5 * j as f64);
            let a = t_series.eval(z).unwrap().value;
            let b = t_eval.eval(z).unwrap().value;
            assert_abs_diff_eq!((a - b).norm(), 0.0, epsilon = 1e-8);
        }
    }
}
