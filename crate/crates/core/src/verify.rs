//! Numerical certification of the radius formulas.
//!
//! [`estimate_radius`] scans outward along the radius, tracking the minimum of
//! `Re q_T` over concentric circles, and bisects the first sign change of
//! `min Re q_T - alpha`. Because the closed forms are lower bounds, soundness
//! is the one-sided check `r_estimate >= r_formula - tol`. [`lemma_audit`]
//! checks the distortion bounds feeding the proofs, including their sharpness
//! at real-axis points.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::families::{extremal, sample_member, AnalyticFn, ClassSpec};
use crate::radius::{radius_formula, RadiusQuery};
use crate::volterra::convexity_functional_t;
use crate::{Error, Result};

/// Sampling plan and tolerances for the numeric checks.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GridSpec {
    /// Angular samples per circle.
    pub n_theta: usize,
    /// Radial scan steps (estimator) or concentric circles (membership).
    pub n_radial: usize,
    /// Largest radius probed.
    pub r_cap: f64,
    /// Bisection tolerance in `r`.
    pub tol: f64,
}

impl GridSpec {
    pub fn new(n_theta: usize, n_radial: usize, r_cap: f64, tol: f64) -> Result<Self> {
        if n_theta < 64 {
            return Err(Error::InvalidParams(format!("n_theta must be >= 64, got {n_theta}")));
        }
        if tol < 1e-8 {
            return Err(Error::InvalidParams(format!("tol must be >= 1e-8, got {tol}")));
        }
        if !(0.0 < r_cap && r_cap <= 0.999) {
            return Err(Error::InvalidParams(format!("r_cap must lie in (0, 0.999], got {r_cap}")));
        }
        Ok(Self { n_theta, n_radial, r_cap, tol })
    }

    /// Membership-check grid: 720 angles x 32 circles up to 0.95.
    pub fn membership() -> Self {
        Self { n_theta: 720, n_radial: 32, r_cap: 0.95, tol: 1e-6 }
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { n_theta: 720, n_radial: 512, r_cap: 0.99, tol: 1e-6 }
    }
}

/// Soundness tolerance for `r_estimate >= r_formula - TOL_ACCEPT`.
pub const TOL_ACCEPT: f64 = 1e-3;

/// Outcome of one certified pair.
#[derive(Debug, Clone, Serialize)]
pub struct RadiusReport {
    pub theorem: String,
    pub alpha: f64,
    pub a: Option<[f64; 2]>,
    pub b: Option<[f64; 2]>,
    pub gamma: Option<f64>,
    pub beta: Option<f64>,
    pub k: Option<f64>,
    /// Closed-form radius (uncapped).
    pub r_formula: f64,
    /// Numeric estimate, limited by the grid cap.
    pub r_estimate: f64,
    /// `r_estimate - min(r_formula, r_cap)`; negative beyond tolerance is a
    /// red flag, recorded rather than raised.
    pub margin: f64,
    pub worst_angle: f64,
    pub pair_label: String,
    /// First radius at which evaluation failed, when any.
    pub first_failure: Option<f64>,
    pub grid: GridSpec,
    pub seed: u64,
}

/// Minimum of `Re q_T` over the circle `|z| = r`, with one golden-section
/// refinement around the discrete argmin. Returns `(min_value, argmin_angle)`.
pub fn min_real_convexity(
    f: &AnalyticFn,
    g: &AnalyticFn,
    r: f64,
    grid: &GridSpec,
) -> Result<(f64, f64)> {
    let eval = |theta: f64| -> Result<f64> {
        Ok(convexity_functional_t(f, g, Complex64::from_polar(r, theta))?.re)
    };
    let mut best = f64::INFINITY;
    let mut best_j = 0;
    for j in 0..grid.n_theta {
        let v = eval(2.0 * PI * j as f64 / grid.n_theta as f64)?;
        if v < best {
            best = v;
            best_j = j;
        }
    }
    let h = 2.0 * PI / grid.n_theta as f64;
    let center = h * best_j as f64;
    let (mut lo, mut hi) = (center - h, center + h);
    let phi = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let (mut f1, mut f2) = (eval(x1)?, eval(x2)?);
    for _ in 0..48 {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = eval(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = eval(x2)?;
        }
    }
    let mid = 0.5 * (lo + hi);
    let vm = eval(mid)?;
    if vm < best {
        best = vm;
        return Ok((best, mid.rem_euclid(2.0 * PI)));
    }
    Ok((best, center.rem_euclid(2.0 * PI)))
}

/// Result of the outward radius scan.
#[derive(Debug, Clone, Copy)]
pub struct RadiusEstimate {
    pub r: f64,
    pub worst_angle: f64,
    /// True when no sign change occurred up to the cap.
    pub reached_cap: bool,
    /// Radius at which evaluation first failed, if the scan was cut short.
    pub first_failure: Option<f64>,
}

/// Estimates the largest `r <= r_cap` with `min Re q_T - alpha >= 0` on every
/// circle up to `r`: outward scan to bracket the first sign change, then
/// bisection to `grid.tol`.
pub fn estimate_radius(
    f: &AnalyticFn,
    g: &AnalyticFn,
    alpha: f64,
    grid: &GridSpec,
) -> Result<RadiusEstimate> {
    // q_T(0) = 2, so the condition holds near the origin for alpha < 1
    if alpha >= 2.0 {
        return Err(Error::HypothesisViolatedAtOrigin(format!("{}/{}", f.label(), g.label())));
    }
    let mut prev_r = 0.0;
    let mut prev_angle = 0.0;
    for j in 1..=grid.n_radial {
        let r = grid.r_cap * j as f64 / grid.n_radial as f64;
        let (m, angle) = match min_real_convexity(f, g, r, grid) {
            Ok(v) => v,
            Err(Error::PoleAtEvaluationPoint { .. })
            | Err(Error::RadiusTooLarge { .. })
            | Err(Error::TruncationUnreliable { .. }) => {
                return Ok(RadiusEstimate {
                    r: prev_r,
                    worst_angle: prev_angle,
                    reached_cap: false,
                    first_failure: Some(r),
                });
            }
            Err(e) => return Err(e),
        };
        if m - alpha < 0.0 {
            // bisect the sign change of min Re q_T - alpha in (prev_r, r]
            let (mut lo, mut hi) = (prev_r, r);
            let mut angle_at = angle;
            while hi - lo > grid.tol {
                let mid = 0.5 * (lo + hi);
                let (mm, ma) = min_real_convexity(f, g, mid, grid)?;
                if mm - alpha < 0.0 {
                    hi = mid;
                    angle_at = ma;
                } else {
                    lo = mid;
                }
            }
            return Ok(RadiusEstimate {
                r: 0.5 * (lo + hi),
                worst_angle: angle_at,
                reached_cap: false,
                first_failure: None,
            });
        }
        prev_r = r;
        prev_angle = angle;
    }
    Ok(RadiusEstimate {
        r: grid.r_cap,
        worst_angle: prev_angle,
        reached_cap: true,
        first_failure: None,
    })
}

/// Convexity radius of a single function: largest `r` with
/// `min Re{1 + z f''/f'} - alpha >= 0`.
pub fn fn_convexity_radius(f: &AnalyticFn, alpha: f64, grid: &GridSpec) -> Result<RadiusEstimate> {
    // reuse the pair machinery with the identity as the starlike factor,
    // shifted by 1: q_T(z, id, f) = 1 + (1 + z f''/f'), so compare against
    // alpha + 1
    estimate_radius(&AnalyticFn::identity(), f, alpha + 1.0, grid)
}

/// Distortion bounds feeding the radius proofs.
#[derive(Debug, Clone, Copy)]
pub enum Lemma {
    /// Universal LIF bound `|z f''/f' - 2r^2/(1-r^2)| <= 2 gamma r/(1-r^2)`.
    L31 { gamma: f64 },
    /// LIF order functional bounded by `delta`.
    L32 { delta: f64 },
    /// Univalent distortion bound `|z f''/f' - 2r^2/(1-r^2)| <= 4r/(1-r^2)`.
    L33,
    /// `G(beta)` bound `|f''/f'| <= beta/(1-r)`.
    L34 { beta: f64 },
    /// Bounded-rotation bound `|z f''/f' - 2r^2/(1-r^2)| <= k r/(1-r^2)`.
    RobertsonVk { k: f64 },
}

impl Lemma {
    pub fn label(&self) -> String {
        match self {
            Lemma::L31 { gamma } => format!("L31(gamma={gamma})"),
            Lemma::L32 { delta } => format!("L32(delta={delta})"),
            Lemma::L33 => "L33".to_string(),
            Lemma::L34 { beta } => format!("L34(beta={beta})"),
            Lemma::RobertsonVk { k } => format!("RobertsonVk(k={k})"),
        }
    }
}

/// Outcome of a lemma audit: the grid maximum of `LHS - RHS` and where it was
/// attained (for sharpness checks).
#[derive(Debug, Clone, Copy)]
pub struct LemmaAudit {
    pub max_violation: f64,
    pub argmax: Complex64,
}

/// Checks a distortion bound over the polar grid. `max_violation <= 0` (up to
/// tolerance) means the bound holds everywhere on the grid.
pub fn lemma_audit(f: &AnalyticFn, lemma: &Lemma, grid: &GridSpec) -> Result<LemmaAudit> {
    let mut worst = f64::NEG_INFINITY;
    let mut argmax = Complex64::default();
    for i in 0..grid.n_radial {
        let r = grid.r_cap * (i + 1) as f64 / grid.n_radial as f64;
        for j in 0..grid.n_theta {
            let z = Complex64::from_polar(r, 2.0 * PI * j as f64 / grid.n_theta as f64);
            let e = f.eval(z)?;
            if e.d1.norm() < 1e-12 {
                return Err(Error::PoleAtEvaluationPoint { z });
            }
            let pre_schwarz = z * e.d2 / e.d1;
            let centered = (pre_schwarz - Complex64::new(2.0 * r * r / (1.0 - r * r), 0.0)).norm();
            let violation = match *lemma {
                Lemma::L31 { gamma } => centered - 2.0 * gamma * r / (1.0 - r * r),
                Lemma::L33 => centered - 4.0 * r / (1.0 - r * r),
                Lemma::RobertsonVk { k } => centered - k * r / (1.0 - r * r),
                Lemma::L32 { delta } => {
                    (-z.conj() + 0.5 * (1.0 - r * r) * e.d2 / e.d1).norm() - delta
                }
                Lemma::L34 { beta } => (e.d2 / e.d1).norm() - beta / (1.0 - r),
            };
            if violation > worst {
                worst = violation;
                argmax = z;
            }
        }
    }
    Ok(LemmaAudit { max_violation: worst, argmax })
}

/// How pairs for a theorem are produced.
#[derive(Debug, Clone, Copy)]
pub enum VerifyMode {
    /// The closed-form extremal pair.
    Extremal,
    /// `n` seeded random members of the hypothesis classes.
    Sampled { n: usize, seed: u64 },
}

fn hypothesis_classes(q: &RadiusQuery) -> Result<(ClassSpec, ClassSpec)> {
    Ok(match *q {
        RadiusQuery::T41 { a, b, .. } => (
            ClassSpec::JanowskiStarlike { a, b },
            ClassSpec::JanowskiConvex { a, b },
        ),
        RadiusQuery::T42 { alpha, gamma } => (
            ClassSpec::StarlikeOrder { alpha },
            ClassSpec::UniversalLif { gamma },
        ),
        RadiusQuery::T43 { alpha } => (
            ClassSpec::StarlikeOrder { alpha },
            ClassSpec::LifOrder { delta: 1.0 },
        ),
        RadiusQuery::T44 { alpha } => (ClassSpec::StarlikeOrder { alpha }, ClassSpec::Univalent),
        RadiusQuery::T45 { alpha, beta } => {
            (ClassSpec::StarlikeOrder { alpha }, ClassSpec::GBeta { beta })
        }
        RadiusQuery::T46 { alpha, k } => (
            ClassSpec::StarlikeOrder { alpha },
            ClassSpec::BoundaryRotation { k },
        ),
    })
}

fn report_params(q: &RadiusQuery) -> (Option<[f64; 2]>, Option<[f64; 2]>, Option<f64>, Option<f64>, Option<f64>) {
    match *q {
        RadiusQuery::T41 { a, b, .. } => (Some([a.re, a.im]), Some([b.re, b.im]), None, None, None),
        RadiusQuery::T42 { gamma, .. } => (None, None, Some(gamma), None, None),
        RadiusQuery::T43 { .. } => (None, None, Some(1.0), None, None),
        RadiusQuery::T44 { .. } => (None, None, None, None, None),
        RadiusQuery::T45 { beta, .. } => (None, None, None, Some(beta), None),
        RadiusQuery::T46 { k, .. } => (None, None, None, None, Some(k)),
    }
}

/// Builds the hypothesis pair(s), estimates the radius, and reports the
/// soundness margin against the closed form for each pair.
pub fn verify_theorem(
    q: &RadiusQuery,
    mode: &VerifyMode,
    grid: &GridSpec,
) -> Result<Vec<RadiusReport>> {
    let formula = radius_formula(q)?;
    let (f_class, g_class) = hypothesis_classes(q)?;
    let alpha = q.alpha();
    let order = q.convexity_order();
    let (a, b, gamma, beta, k) = report_params(q);

    let pairs: Vec<(AnalyticFn, AnalyticFn, u64)> = match *mode {
        VerifyMode::Extremal => vec![(extremal(&f_class)?, extremal(&g_class)?, 0)],
        VerifyMode::Sampled { n, seed } => {
            let sample_or_extremal = |class: &ClassSpec, s: u64| -> Result<AnalyticFn> {
                match class {
                    ClassSpec::StarlikeOrder { .. }
                    | ClassSpec::ConvexOrder { .. }
                    | ClassSpec::JanowskiStarlike { .. }
                    | ClassSpec::JanowskiConvex { .. }
                    | ClassSpec::GBeta { .. } => {
                        let s_fn = sample_member(class, s)?;
                        Ok(AnalyticFn::from_series(
                            format!("sample[{} seed={s}]", class.label()),
                            s_fn,
                        ))
                    }
                    // classes without a constructive sampler fall back to
                    // their extremal member
                    _ => extremal(class),
                }
            };
            (0..n as u64)
                .map(|i| {
                    let f = sample_or_extremal(&f_class, seed.wrapping_add(2 * i))?;
                    let g = sample_or_extremal(&g_class, seed.wrapping_add(2 * i + 1))?;
                    Ok((f, g, seed.wrapping_add(2 * i)))
                })
                .collect::<Result<Vec<_>>>()?
        }
    };

    let mut reports = Vec::with_capacity(pairs.len());
    for (f, g, seed) in pairs {
        let r_cap = grid.r_cap.min(f.r_max()).min(g.r_max());
        let grid_eff = GridSpec { r_cap, ..*grid };
        let est = estimate_radius(&f, &g, order, &grid_eff)?;
        let effective_formula = formula.r.min(r_cap);
        reports.push(RadiusReport {
            theorem: q.theorem_name().to_string(),
            alpha,
            a,
            b,
            gamma,
            beta,
            k,
            r_formula: formula.r,
            r_estimate: est.r,
            margin: est.r - effective_formula,
            worst_angle: est.worst_angle,
            pair_label: format!("{}/{}", f.label(), g.label()),
            first_failure: est.first_failure,
            grid: grid_eff,
            seed,
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::koebe;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn fast_grid() -> GridSpec {
        GridSpec { n_theta: 256, n_radial: 256, r_cap: 0.99, tol: 1e-6 }
    }

    #[test]
    fn min_for_identity_pair_is_two() {
        let id = AnalyticFn::identity();
        for r in [0.1, 0.5, 0.9] {
            let (m, _) = min_real_convexity(&id, &id, r, &fast_grid()).unwrap();
            assert_abs_diff_eq!(m, 2.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn min_for_koebe_identity_pair() {
        let r = 2.0 - 3.0_f64.sqrt();
        let (m, angle) = min_real_convexity(&koebe(), &AnalyticFn::identity(), r, &fast_grid())
            .unwrap();
        // min Re (1+z)/(1-z) on |z|=r is (1-r)/(1+r), attained at z = -r
        assert_abs_diff_eq!(m, 1.0 + (1.0 - r) / (1.0 + r), epsilon = 1e-9);
        assert_abs_diff_eq!(angle, std::f64::consts::PI, epsilon = 1e-3);
    }

    #[test]
    fn min_vanishes_at_janowski_critical_radius() {
        let f = extremal(&ClassSpec::JanowskiStarlike { a: c(2.0), b: c(-1.0) }).unwrap();
        let g = extremal(&ClassSpec::JanowskiConvex { a: c(2.0), b: c(-1.0) }).unwrap();
        let (m, _) = min_real_convexity(&f, &g, 0.5, &fast_grid()).unwrap();
        assert!(m.abs() < 2e-2, "min {m}");
    }

    #[test]
    fn estimate_koebe_identity_reaches_cap() {
        let est = estimate_radius(&koebe(), &AnalyticFn::identity(), 0.0, &fast_grid()).unwrap();
        assert!(est.reached_cap);
        assert_abs_diff_eq!(est.r, 0.99);
    }

    #[test]
    fn estimate_janowski_21_pair() {
        let f = extremal(&ClassSpec::JanowskiStarlike { a: c(2.0), b: c(1.0) }).unwrap();
        let g = extremal(&ClassSpec::JanowskiConvex { a: c(2.0), b: c(1.0) }).unwrap();
        let est = estimate_radius(&f, &g, 0.0, &fast_grid()).unwrap();
        assert!(est.r >= 0.5 - 1e-3, "estimate {}", est.r);
    }

    #[test]
    fn koebe_convexity_radius() {
        let est = fn_convexity_radius(&koebe(), 0.0, &fast_grid()).unwrap();
        assert_abs_diff_eq!(est.r, 2.0 - 3.0_f64.sqrt(), epsilon = 1e-4);
    }

    #[test]
    fn estimate_monotone_in_alpha() {
        let f = extremal(&ClassSpec::StarlikeOrder { alpha: 0.0 }).unwrap();
        let g = extremal(&ClassSpec::GBeta { beta: 1.0 }).unwrap();
        let mut prev = f64::INFINITY;
        for alpha in [0.0, 0.3, 0.6] {
            let est = estimate_radius(&f, &g, alpha, &fast_grid()).unwrap();
            assert!(est.r <= prev + 1e-9);
            prev = est.r;
        }
    }

    #[test]
    fn lemma_l33_identity_function_strict() {
        let audit = lemma_audit(
            &AnalyticFn::identity(),
            &Lemma::L33,
            &GridSpec::membership(),
        )
        .unwrap();
        assert!(audit.max_violation < 0.0);
    }

    #[test]
    fn lemma_l33_koebe_equality_on_real_axis() {
        let f = koebe();
        let z = c(0.5);
        let e = f.eval(z).unwrap();
        let lhs = (z * e.d2 / e.d1 - c(2.0 * 0.25 / 0.75)).norm();
        assert_abs_diff_eq!(lhs, 8.0 / 3.0, epsilon = 1e-9);
    }

    #[test]
    fn lemma_l34_equality_on_real_axis() {
        let g = extremal(&ClassSpec::GBeta { beta: 1.0 }).unwrap();
        for r in [0.2, 0.5, 0.8] {
            let e = g.eval(c(r)).unwrap();
            assert_abs_diff_eq!((e.d2 / e.d1).norm(), 1.0 / (1.0 - r), epsilon = 1e-10);
        }
    }

    #[test]
    fn verify_t41_extremal_corollary() {
        let q = RadiusQuery::T41 { alpha: 0.0, a: c(2.0), b: c(-1.0) };
        let reports = verify_theorem(&q, &VerifyMode::Extremal, &fast_grid()).unwrap();
        assert_eq!(reports.len(), 1);
        assert_abs_diff_eq!(reports[0].r_formula, 0.5);
        assert!(reports[0].margin >= -TOL_ACCEPT, "margin {}", reports[0].margin);
    }

    #[test]
    fn verify_t42_corollary_whole_disc() {
        let q = RadiusQuery::T42 { alpha: 0.0, gamma: 1.0 };
        let reports = verify_theorem(&q, &VerifyMode::Extremal, &fast_grid()).unwrap();
        assert_abs_diff_eq!(reports[0].r_formula, 1.0);
        assert_abs_diff_eq!(reports[0].r_estimate, 0.99);
        assert!(reports[0].margin >= -TOL_ACCEPT);
    }

    #[test]
    fn verify_t46_extremal() {
        let q = RadiusQuery::T46 { alpha: 0.0, k: 4.0 };
        let reports = verify_theorem(&q, &VerifyMode::Extremal, &fast_grid()).unwrap();
        assert_abs_diff_eq!(reports[0].r_formula, 2.0 - 3.0_f64.sqrt(), epsilon = 1e-12);
        assert!(reports[0].margin >= -TOL_ACCEPT, "margin {}", reports[0].margin);
    }
}
