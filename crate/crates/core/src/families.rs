//! Function classes on the unit disc: construction of extremal members,
//! seeded random members, and numerical membership checks.
//!
//! Each class is described by a [`ClassSpec`]. Extremal members come with
//! closed-form value/derivative evaluators ([`AnalyticFn`]) usable close to
//! the boundary; random members are built as truncated series by pushing a
//! Schwarz-lemma witness (a seeded Blaschke product) through the defining
//! half-plane or subordination condition.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::series::{EvalResult, PowerSeries, DEFAULT_ORDER};
use crate::verify::GridSpec;
use crate::volterra::integrate_segment;
use crate::{Error, Result};

/// Tail-estimate tolerance above which a series evaluation is rejected.
pub const TAIL_TOL: f64 = 1e-3;

const POLE_TOL: f64 = 1e-12;

/// A tagged description of one of the function classes under study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassSpec {
    /// Starlike of order `alpha`: `Re{z f'/f} > alpha`.
    StarlikeOrder { alpha: f64 },
    /// Convex of order `alpha`: `Re{1 + z f''/f'} > alpha`.
    ConvexOrder { alpha: f64 },
    /// `z f'/f` subordinate to `(1 + Az)/(1 + Bz)`.
    JanowskiStarlike { a: Complex64, b: Complex64 },
    /// `1 + z f''/f'` subordinate to `(1 + Az)/(1 + Bz)`.
    JanowskiConvex { a: Complex64, b: Complex64 },
    /// Locally univalent with `Re{1 + z f''/f'} < 1 + beta/2`.
    GBeta { beta: f64 },
    /// Boundary rotation at most `k * pi`.
    BoundaryRotation { k: f64 },
    /// Universal linear-invariant family of order at most `gamma`.
    UniversalLif { gamma: f64 },
    /// Linear-invariant family of order `delta`.
    LifOrder { delta: f64 },
    /// Univalent functions.
    Univalent,
}

fn check_order(alpha: f64) -> Result<()> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::InvalidParams(format!("order alpha must lie in [0,1), got {alpha}")));
    }
    Ok(())
}

/// The Janowski classes are used with the hypothesis `|A| > 1`, `|B| <= 1`.
/// `allow_classical` admits the classical real range `-1 <= B < A <= 1`
/// instead; reports built from such specs fall outside the stated hypothesis
/// of the radius theorem.
fn check_janowski(a: Complex64, b: Complex64, allow_classical: bool) -> Result<()> {
    if b.norm() > 1.0 + 1e-12 {
        return Err(Error::InvalidParams(format!("|B| must be <= 1, got {}", b.norm())));
    }
    if a.norm() <= 1.0 {
        let classical_ok = allow_classical
            && a.im == 0.0
            && b.im == 0.0
            && -1.0 <= b.re
            && b.re < a.re
            && a.re <= 1.0;
        if !classical_ok {
            return Err(Error::InvalidParams(format!("|A| must be > 1, got {}", a.norm())));
        }
    }
    Ok(())
}

impl ClassSpec {
    pub fn starlike_order(alpha: f64) -> Result<Self> {
        check_order(alpha)?;
        Ok(Self::StarlikeOrder { alpha })
    }

    pub fn convex_order(alpha: f64) -> Result<Self> {
        check_order(alpha)?;
        Ok(Self::ConvexOrder { alpha })
    }

    pub fn janowski_starlike(a: Complex64, b: Complex64, allow_classical: bool) -> Result<Self> {
        check_janowski(a, b, allow_classical)?;
        Ok(Self::JanowskiStarlike { a, b })
    }

    pub fn janowski_convex(a: Complex64, b: Complex64, allow_classical: bool) -> Result<Self> {
        check_janowski(a, b, allow_classical)?;
        Ok(Self::JanowskiConvex { a, b })
    }

    pub fn g_beta(beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta <= 1.0) {
            return Err(Error::InvalidParams(format!("beta must lie in (0,1], got {beta}")));
        }
        Ok(Self::GBeta { beta })
    }

    pub fn boundary_rotation(k: f64) -> Result<Self> {
        if k < 2.0 {
            return Err(Error::InvalidParams(format!("k must be >= 2, got {k}")));
        }
        Ok(Self::BoundaryRotation { k })
    }

    pub fn universal_lif(gamma: f64) -> Result<Self> {
        if gamma < 1.0 {
            return Err(Error::InvalidParams(format!("gamma must be >= 1, got {gamma}")));
        }
        Ok(Self::UniversalLif { gamma })
    }

    pub fn lif_order(delta: f64) -> Result<Self> {
        if delta < 1.0 {
            return Err(Error::InvalidParams(format!("delta must be >= 1, got {delta}")));
        }
        Ok(Self::LifOrder { delta })
    }

    pub fn label(&self) -> String {
        match self {
            Self::StarlikeOrder { alpha } => format!("S*({alpha})"),
            Self::ConvexOrder { alpha } => format!("K({alpha})"),
            Self::JanowskiStarlike { a, b } => format!("S*({a},{b})"),
            Self::JanowskiConvex { a, b } => format!("K({a},{b})"),
            Self::GBeta { beta } => format!("G({beta})"),
            Self::BoundaryRotation { k } => format!("V_{k}"),
            Self::UniversalLif { gamma } => format!("UL_{gamma}"),
            Self::LifOrder { delta } => format!("LIF({delta})"),
            Self::Univalent => "U".to_string(),
        }
    }
}

/// Flat JSON form: `{"tag": "...", "alpha": .., "A": [re,im], ...}` with
/// absent fields omitted.
#[derive(Debug, Serialize, Deserialize)]
pub struct ClassSpecJson {
    pub tag: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(rename = "A", skip_serializing_if = "Option::is_none")]
    pub a: Option<[f64; 2]>,
    #[serde(rename = "B", skip_serializing_if = "Option::is_none")]
    pub b: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
}

impl From<&ClassSpec> for ClassSpecJson {
    fn from(s: &ClassSpec) -> Self {
        let mut j = ClassSpecJson {
            tag: String::new(),
            alpha: None,
            a: None,
            b: None,
            beta: None,
            k: None,
            gamma: None,
            delta: None,
        };
        match *s {
            ClassSpec::StarlikeOrder { alpha } => {
                j.tag = "StarlikeOrder".into();
                j.alpha = Some(alpha);
            }
            ClassSpec::ConvexOrder { alpha } => {
                j.tag = "ConvexOrder".into();
                j.alpha = Some(alpha);
            }
            ClassSpec::JanowskiStarlike { a, b } => {
                j.tag = "JanowskiStarlike".into();
                j.a = Some([a.re, a.im]);
                j.b = Some([b.re, b.im]);
            }
            ClassSpec::JanowskiConvex { a, b } => {
                j.tag = "JanowskiConvex".into();
                j.a = Some([a.re, a.im]);
                j.b = Some([b.re, b.im]);
            }
            ClassSpec::GBeta { beta } => {
                j.tag = "GBeta".into();
                j.beta = Some(beta);
            }
            ClassSpec::BoundaryRotation { k } => {
                j.tag = "BoundaryRotation".into();
                j.k = Some(k);
            }
            ClassSpec::UniversalLif { gamma } => {
                j.tag = "UniversalLIF".into();
                j.gamma = Some(gamma);
            }
            ClassSpec::LifOrder { delta } => {
                j.tag = "LIFOrder".into();
                j.delta = Some(delta);
            }
            ClassSpec::Univalent => j.tag = "Univalent".into(),
        }
        j
    }
}

/// Parameters of a disc automorphism `phi(z) = e^{i theta} (z + a)/(1 + conj(a) z)`.
#[derive(Debug, Clone, Copy)]
pub struct MoebiusParams {
    pub a: Complex64,
    pub theta: f64,
}

impl MoebiusParams {
    pub fn new(a: Complex64, theta: f64) -> Result<Self> {
        if a.norm() >= 1.0 {
            return Err(Error::InvalidParams(format!("|a| must be < 1, got {}", a.norm())));
        }
        Ok(Self { a, theta })
    }

    pub fn identity() -> Self {
        Self { a: Complex64::default(), theta: 0.0 }
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        Complex64::from_polar(1.0, self.theta) * (z + self.a) / (1.0 + self.a.conj() * z)
    }

    pub fn d1(&self, z: Complex64) -> Complex64 {
        let d = 1.0 + self.a.conj() * z;
        Complex64::from_polar(1.0, self.theta) * (1.0 - self.a.norm_sqr()) / (d * d)
    }

    pub fn d2(&self, z: Complex64) -> Complex64 {
        let d = 1.0 + self.a.conj() * z;
        Complex64::from_polar(1.0, self.theta) * (1.0 - self.a.norm_sqr()) * (-2.0 * self.a.conj())
            / (d * d * d)
    }
}

#[derive(Clone)]
enum Body {
    Closed(Arc<dyn Fn(Complex64) -> EvalResult + Send + Sync>),
    Series(PowerSeries),
}

/// An analytic function packaged as an evaluator for `(f, f', f'')` with a
/// label and an evaluable radius. Closed-form extremals are trusted up to
/// `|z| = 0.999`; series-backed functions up to the series evaluation radius.
#[derive(Clone)]
pub struct AnalyticFn {
    label: String,
    r_max: f64,
    body: Body,
    series: Option<PowerSeries>,
}

impl std::fmt::Debug for AnalyticFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AnalyticFn")
            .field("label", &self.label)
            .field("r_max", &self.r_max)
            .finish()
    }
}

impl AnalyticFn {
    pub fn closed(
        label: impl Into<String>,
        r_max: f64,
        f: impl Fn(Complex64) -> EvalResult + Send + Sync + 'static,
    ) -> Self {
        Self { label: label.into(), r_max, body: Body::Closed(Arc::new(f)), series: None }
    }

    pub fn from_series(label: impl Into<String>, s: PowerSeries) -> Self {
        Self {
            label: label.into(),
            r_max: crate::series::R_MAX,
            body: Body::Series(s.clone()),
            series: Some(s),
        }
    }

    /// The identity function `f(z) = z`.
    pub fn identity() -> Self {
        Self::closed("z", 0.999, |z| EvalResult {
            value: z,
            d1: Complex64::new(1.0, 0.0),
            d2: Complex64::default(),
            tail: 0.0,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn series(&self) -> Option<&PowerSeries> {
        self.series.as_ref()
    }

    pub fn with_series(mut self, s: PowerSeries) -> Self {
        self.series = Some(s);
        self
    }

    /// Evaluates `(f, f', f'')`, enforcing the radius bound and, for
    /// series-backed functions, the truncation-tail tolerance.
    pub fn eval(&self, z: Complex64) -> Result<EvalResult> {
        if z.norm() > self.r_max + 1e-15 {
            return Err(Error::RadiusTooLarge { r: z.norm(), r_max: self.r_max });
        }
        let e = self.eval_raw(z);
        if e.tail > TAIL_TOL {
            return Err(Error::TruncationUnreliable { tail: e.tail, tol: TAIL_TOL });
        }
        Ok(e)
    }

    pub(crate) fn eval_raw(&self, z: Complex64) -> EvalResult {
        match &self.body {
            Body::Closed(f) => f(z),
            Body::Series(s) => s.eval_unchecked(z),
        }
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Returns the closed-form extremal member of the class.
pub fn extremal(spec: &ClassSpec) -> Result<AnalyticFn> {
    let label = format!("extremal[{}]", spec.label());
    let f = match *spec {
        ClassSpec::StarlikeOrder { alpha } => {
            // z (1-z)^{-c} with c = 2(1-alpha)
            let c = 2.0 * (1.0 - alpha);
            AnalyticFn::closed(label, 0.999, move |z| {
                let u = (ONE - z).powc(re(-c - 1.0));
                let lead = ONE + (c - 1.0) * z;
                EvalResult {
                    value: z * (ONE - z).powc(re(-c)),
                    d1: lead * u,
                    d2: (c - 1.0) * u + (c + 1.0) * lead * (ONE - z).powc(re(-c - 2.0)),
                    tail: 0.0,
                }
            })
        }
        ClassSpec::ConvexOrder { alpha } => {
            // primitive of (1-z)^{2 alpha - 2}
            let m = 2.0 * alpha - 1.0;
            if m.abs() < 1e-12 {
                AnalyticFn::closed(label, 0.999, move |z| EvalResult {
                    value: -(ONE - z).ln(),
                    d1: (ONE - z).inv(),
                    d2: (ONE - z).powc(re(-2.0)),
                    tail: 0.0,
                })
            } else {
                AnalyticFn::closed(label, 0.999, move |z| EvalResult {
                    value: (ONE - (ONE - z).powc(re(m))) / m,
                    d1: (ONE - z).powc(re(m - 1.0)),
                    d2: (1.0 - m) * (ONE - z).powc(re(m - 2.0)),
                    tail: 0.0,
                })
            }
        }
        ClassSpec::JanowskiStarlike { a, b } => {
            if b.norm() < 1e-14 {
                // z e^{Az}
                AnalyticFn::closed(label, 0.999, move |z| {
                    let e = (a * z).exp();
                    EvalResult {
                        value: z * e,
                        d1: (ONE + a * z) * e,
                        d2: (2.0 * a + a * a * z) * e,
                        tail: 0.0,
                    }
                })
            } else {
                // z (1+Bz)^{(A-B)/B}
                let w = (a - b) / b;
                AnalyticFn::closed(label, 0.999, move |z| {
                    let base = ONE + b * z;
                    let u = base.powc(w - ONE);
                    EvalResult {
                        value: z * base.powc(w),
                        d1: (ONE + a * z) * u,
                        d2: a * u + (w - ONE) * b * (ONE + a * z) * base.powc(w - 2.0 * ONE),
                        tail: 0.0,
                    }
                })
            }
        }
        ClassSpec::JanowskiConvex { a, b } => {
            if b.norm() < 1e-14 {
                // primitive of e^{Az}
                AnalyticFn::closed(label, 0.999, move |z| {
                    let e = (a * z).exp();
                    EvalResult { value: (e - ONE) / a, d1: e, d2: a * e, tail: 0.0 }
                })
            } else {
                // primitive of (1+Bz)^{(A-B)/B}
                let w = (a - b) / b;
                AnalyticFn::closed(label, 0.999, move |z| {
                    let base = ONE + b * z;
                    EvalResult {
                        value: (base.powc(a / b) - ONE) / a,
                        d1: base.powc(w),
                        d2: w * b * base.powc(w - ONE),
                        tail: 0.0,
                    }
                })
            }
        }
        ClassSpec::GBeta { beta } => {
            // primitive of (1-z)^beta
            AnalyticFn::closed(label, 0.999, move |z| EvalResult {
                value: (ONE - (ONE - z).powc(re(beta + 1.0))) / (beta + 1.0),
                d1: (ONE - z).powc(re(beta)),
                d2: -beta * (ONE - z).powc(re(beta - 1.0)),
                tail: 0.0,
            })
        }
        ClassSpec::Univalent => koebe(),
        ClassSpec::BoundaryRotation { k } => {
            // Paatero-type member: primitive of (1+z)^{k/2-1} (1-z)^{-k/2-1}.
            let (p, q) = (k / 2.0 - 1.0, -k / 2.0 - 1.0);
            let d1 = move |z: Complex64| (ONE + z).powc(re(p)) * (ONE - z).powc(re(q));
            AnalyticFn::closed(label, 0.999, move |z| {
                let fp = d1(z);
                EvalResult {
                    value: integrate_segment(d1, z),
                    d1: fp,
                    d2: fp * (re(p) / (ONE + z) - re(q) / (ONE - z)),
                    tail: 0.0,
                }
            })
        }
        ClassSpec::UniversalLif { gamma } | ClassSpec::LifOrder { delta: gamma } => {
            // ( ((1+z)/(1-z))^gamma - 1 ) / (2 gamma)
            AnalyticFn::closed(label, 0.999, move |z| {
                let fp = (ONE + z).powc(re(gamma - 1.0)) * (ONE - z).powc(re(-gamma - 1.0));
                EvalResult {
                    value: (((ONE + z) / (ONE - z)).powc(re(gamma)) - ONE) / (2.0 * gamma),
                    d1: fp,
                    d2: fp * (re(gamma - 1.0) / (ONE + z) + re(gamma + 1.0) / (ONE - z)),
                    tail: 0.0,
                }
            })
        }
    };
    Ok(f)
}

/// The Koebe function `z/(1-z)^2`.
pub fn koebe() -> AnalyticFn {
    AnalyticFn::closed("koebe", 0.999, |z| {
        let d = ONE - z;
        EvalResult {
            value: z / (d * d),
            d1: (ONE + z) / (d * d * d),
            d2: (re(4.0) + 2.0 * z) / (d * d * d * d),
            tail: 0.0,
        }
    })
}

/// Reconstructs the normalized `f` with `z f'/f = p` as
/// `f = z exp( ∫_0^z (p(s)-1)/s ds )`.
pub fn from_log_derivative(p: &PowerSeries) -> Result<PowerSeries> {
    if (p.coeff(0) - ONE).norm() > 1e-10 {
        return Err(Error::ConstantTermNotOne);
    }
    Ok(integrated_ratio(p).exp()?.shift_up())
}

/// Reconstructs the normalized `g` with `1 + z g''/g' = q` via
/// `g' = exp( ∫_0^z (q(s)-1)/s ds )`, `g = ∫_0^z g'`.
pub fn from_convexity_profile(q: &PowerSeries) -> Result<PowerSeries> {
    if (q.coeff(0) - ONE).norm() > 1e-10 {
        return Err(Error::ConstantTermNotOne);
    }
    Ok(integrated_ratio(q).exp()?.integrate())
}

/// `∫_0^z (p(s)-1)/s ds`, termwise: coefficient `p_n / n` for n >= 1.
fn integrated_ratio(p: &PowerSeries) -> PowerSeries {
    let mut coeffs = vec![Complex64::default(); p.order() + 1];
    for (n, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = p.coeff(n) / n as f64;
    }
    PowerSeries::new(coeffs).expect("same order as input")
}

/// A seeded Schwarz-lemma witness: `omega(z) = z * prod_j e^{i t_j}(z+a_j)/(1+conj(a_j) z)`
/// with `|a_j| <= 0.8`. Satisfies `omega(0) = 0` and `|omega(z)| <= |z|`.
pub fn schur_sample(seed: u64, m: usize) -> PowerSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    schur_sample_with_rng(&mut rng, m)
}

fn schur_sample_with_rng(rng: &mut ChaCha8Rng, m: usize) -> PowerSeries {
    let mut omega = PowerSeries::var(DEFAULT_ORDER);
    for _ in 0..m {
        let rho: f64 = 0.8 * rng.gen::<f64>();
        let phi: f64 = 2.0 * PI * rng.gen::<f64>();
        let theta: f64 = 2.0 * PI * rng.gen::<f64>();
        let a = Complex64::from_polar(rho, phi);
        let mut num = vec![Complex64::default(); DEFAULT_ORDER + 1];
        num[0] = a;
        num[1] = ONE;
        let num = PowerSeries::new(num).unwrap();
        let mut den = vec![Complex64::default(); DEFAULT_ORDER + 1];
        den[0] = ONE;
        den[1] = a.conj();
        let den = PowerSeries::new(den).unwrap();
        let factor = num.mul(&den.reciprocal().expect("den(0) = 1"));
        omega = omega.mul(&factor).scale(Complex64::from_polar(1.0, theta));
    }
    omega
}

/// Builds a seeded random member of the class as a truncated series and
/// re-verifies membership at radius 0.9 before returning it.
pub fn sample_member(spec: &ClassSpec, seed: u64) -> Result<PowerSeries> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(1..=3);
    let omega = schur_sample_with_rng(&mut rng, m);
    let one = PowerSeries::constant(ONE, DEFAULT_ORDER);

    let moebius = |a: Complex64, b: Complex64| -> Result<PowerSeries> {
        let num = one.add(&omega.scale(a));
        let den = one.add(&omega.scale(b));
        Ok(num.mul(&den.reciprocal()?))
    };

    let f = match *spec {
        ClassSpec::StarlikeOrder { alpha } => {
            let p = moebius(re(1.0 - 2.0 * alpha), re(-1.0))?;
            from_log_derivative(&p)?
        }
        ClassSpec::ConvexOrder { alpha } => {
            let q = moebius(re(1.0 - 2.0 * alpha), re(-1.0))?;
            from_convexity_profile(&q)?
        }
        ClassSpec::JanowskiStarlike { a, b } => from_log_derivative(&moebius(a, b)?)?,
        ClassSpec::JanowskiConvex { a, b } => from_convexity_profile(&moebius(a, b)?)?,
        ClassSpec::GBeta { beta } => {
            // q = 1 - beta * omega/(1 - omega) maps into Re q < 1 + beta/2.
            let q = one.sub(&omega.scale(re(beta)).mul(&one.sub(&omega).reciprocal()?));
            from_convexity_profile(&q)?
        }
        _ => {
            return Err(Error::UnsupportedSpec(format!(
                "no constructive sampler for {}",
                spec.label()
            )))
        }
    };

    let margin = check_membership(
        &AnalyticFn::from_series(format!("sample[{} seed={seed}]", spec.label()), f.clone()),
        spec,
        0.9,
        &GridSpec::membership(),
    )?;
    if margin < -1e-8 {
        return Err(Error::MembershipCheckFailed { margin });
    }
    Ok(f)
}

/// Evaluates the worst-case slack of the class-defining inequality over a
/// polar grid restricted to `|z| <= r`. Positive means the condition holds
/// with that margin; negative means it is violated.
///
/// For `BoundaryRotation` the check is the fixed-radius necessary condition
/// `∫ |Re{1 + z f''/f'}| dθ <= k π` at `|z| = r` (trapezoid rule); for the
/// linear-invariant classes it is the order functional staying below the
/// class order.
pub fn check_membership(f: &AnalyticFn, spec: &ClassSpec, r: f64, grid: &GridSpec) -> Result<f64> {
    if r > f.r_max() {
        return Err(Error::RadiusTooLarge { r, r_max: f.r_max() });
    }
    if let ClassSpec::BoundaryRotation { k } = *spec {
        let mut integral = 0.0;
        let h = 2.0 * PI / grid.n_theta as f64;
        for j in 0..grid.n_theta {
            let z = Complex64::from_polar(r, h * j as f64);
            let e = f.eval(z)?;
            if e.d1.norm() < POLE_TOL {
                return Err(Error::PoleAtEvaluationPoint { z });
            }
            integral += (ONE + z * e.d2 / e.d1).re.abs() * h;
        }
        return Ok(k * PI - integral);
    }

    let mut worst = f64::INFINITY;
    for i in 0..grid.n_radial {
        let ri = r * (i + 1) as f64 / grid.n_radial as f64;
        for j in 0..grid.n_theta {
            let z = Complex64::from_polar(ri, 2.0 * PI * j as f64 / grid.n_theta as f64);
            let e = f.eval(z)?;
            let slack = membership_slack(spec, z, &e)?;
            if slack < worst {
                worst = slack;
            }
        }
    }
    Ok(worst)
}

fn membership_slack(spec: &ClassSpec, z: Complex64, e: &EvalResult) -> Result<f64> {
    let p = || -> Result<Complex64> {
        if e.value.norm() < POLE_TOL {
            return Err(Error::PoleAtEvaluationPoint { z });
        }
        Ok(z * e.d1 / e.value)
    };
    let q = || -> Result<Complex64> {
        if e.d1.norm() < POLE_TOL {
            return Err(Error::PoleAtEvaluationPoint { z });
        }
        Ok(ONE + z * e.d2 / e.d1)
    };
    let r = z.norm();
    Ok(match *spec {
        ClassSpec::StarlikeOrder { alpha } => p()?.re - alpha,
        ClassSpec::ConvexOrder { alpha } => q()?.re - alpha,
        ClassSpec::JanowskiStarlike { a, b } => {
            let w = subordination_witness(p()?, a, b, z)?;
            r - w.norm()
        }
        ClassSpec::JanowskiConvex { a, b } => {
            let w = subordination_witness(q()?, a, b, z)?;
            r - w.norm()
        }
        ClassSpec::GBeta { beta } => 1.0 + beta / 2.0 - q()?.re,
        ClassSpec::UniversalLif { gamma } => gamma - lif_functional(z, e)?,
        ClassSpec::LifOrder { delta } => delta - lif_functional(z, e)?,
        ClassSpec::Univalent => {
            // necessary condition: the univalence distortion bound
            if e.d1.norm() < POLE_TOL {
                return Err(Error::PoleAtEvaluationPoint { z });
            }
            let lhs = (z * e.d2 / e.d1 - re(2.0 * r * r / (1.0 - r * r))).norm();
            4.0 * r / (1.0 - r * r) - lhs
        }
        ClassSpec::BoundaryRotation { .. } => unreachable!("handled by caller"),
    })
}

/// Inverts the subordination `p ≺ (1+Az)/(1+Bz)` pointwise:
/// `w = (p-1)/(A - Bp)` must satisfy `|w(z)| <= |z|`.
fn subordination_witness(p: Complex64, a: Complex64, b: Complex64, z: Complex64) -> Result<Complex64> {
    let den = a - b * p;
    if den.norm() < POLE_TOL {
        return Err(Error::PoleAtEvaluationPoint { z });
    }
    Ok((p - ONE) / den)
}

/// The order functional `|-conj(z) + (1-|z|^2)/2 * f''/f'|`.
fn lif_functional(z: Complex64, e: &EvalResult) -> Result<f64> {
    if e.d1.norm() < POLE_TOL {
        return Err(Error::PoleAtEvaluationPoint { z });
    }
    Ok((-z.conj() + 0.5 * (1.0 - z.norm_sqr()) * e.d2 / e.d1).norm())
}

/// The Koebe-transform renormalization
/// `F(z) = (f(phi(z)) - f(phi(0))) / (f'(phi(0)) phi'(0))`
/// over a disc automorphism `phi`. The result is again normalized.
pub fn lif_transform(f: &AnalyticFn, phi: &MoebiusParams) -> AnalyticFn {
    let f = f.clone();
    let phi = *phi;
    let w0 = phi.apply(Complex64::default());
    let e0 = f.eval_raw(w0);
    let denom = e0.d1 * phi.d1(Complex64::default());
    let f0 = e0.value;
    // keep phi(z) inside the evaluable radius of f
    let fr = f.r_max();
    let an = phi.a.norm();
    let r_max = (((fr - an) / (1.0 - an * fr)).min(fr)).max(0.0);
    let label = format!("lif[{}]", f.label());
    AnalyticFn::closed(label, r_max, move |z| {
        let w = phi.apply(z);
        let e = f.eval_raw(w);
        let (p1, p2) = (phi.d1(z), phi.d2(z));
        EvalResult {
            value: (e.value - f0) / denom,
            d1: e.d1 * p1 / denom,
            d2: (e.d2 * p1 * p1 + e.d1 * p2) / denom,
            tail: e.tail,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::log_derivative_functionals;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn spec_parameter_ranges() {
        assert!(ClassSpec::starlike_order(1.0).is_err());
        assert!(ClassSpec::g_beta(0.0).is_err());
        assert!(ClassSpec::boundary_rotation(1.5).is_err());
        assert!(ClassSpec::universal_lif(0.5).is_err());
        // radius-theorem hypothesis: |A| > 1, |B| <= 1
        assert!(ClassSpec::janowski_starlike(c(0.5), c(-0.5), false).is_err());
        assert!(ClassSpec::janowski_starlike(c(2.0), c(1.5), false).is_err());
        assert!(ClassSpec::janowski_starlike(c(2.0), c(1.0), false).is_ok());
        // classical range only behind the override
        assert!(ClassSpec::janowski_starlike(c(0.5), c(-0.5), true).is_ok());
    }

    #[test]
    fn koebe_series_coefficients() {
        let spec = ClassSpec::starlike_order(0.0).unwrap();
        let f = extremal(&spec).unwrap();
        // a_n = n for the Koebe function; compare evaluations instead of series
        let k = koebe();
        for t in [0.1, 0.4, 0.7] {
            let z = Complex64::from_polar(t, 1.3);
            let (a, b) = (f.eval(z).unwrap(), k.eval(z).unwrap());
            assert_abs_diff_eq!((a.value - b.value).norm(), 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!((a.d1 - b.d1).norm(), 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!((a.d2 - b.d2).norm(), 0.0, epsilon = 1e-11);
        }
    }

    #[test]
    fn janowski_21_extremal_is_z_plus_z_squared() {
        let spec = ClassSpec::janowski_starlike(c(2.0), c(1.0), false).unwrap();
        let f = extremal(&spec).unwrap();
        for t in [0.2, 0.5, 0.8] {
            let z = Complex64::from_polar(t, 0.7);
            let e = f.eval(z).unwrap();
            assert_abs_diff_eq!((e.value - (z + z * z)).norm(), 0.0, epsilon = 1e-12);
            // z f'/f = (1+2z)/(1+z)
            let p = z * e.d1 / e.value;
            assert_abs_diff_eq!(
                (p - (ONE + 2.0 * z) / (ONE + z)).norm(),
                0.0,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn gbeta_extremal_convexity_profile() {
        let spec = ClassSpec::g_beta(1.0).unwrap();
        let g = extremal(&spec).unwrap();
        for t in [0.2, 0.6] {
            let z = Complex64::from_polar(t, 2.1);
            let e = g.eval(z).unwrap();
            // g = z - z^2/2, 1 + z g''/g' = 1 - z/(1-z)
            assert_abs_diff_eq!((e.value - (z - z * z / 2.0)).norm(), 0.0, epsilon = 1e-12);
            let q = ONE + z * e.d2 / e.d1;
            assert_abs_diff_eq!((q - (ONE - z / (ONE - z))).norm(), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn from_log_derivative_geometric() {
        // p = 1/(1-z) -> f = z/(1-z)
        let p = PowerSeries::from_real(&[1.0, -1.0], 64).reciprocal().unwrap();
        let f = from_log_derivative(&p).unwrap();
        for n in 1..=60 {
            assert_abs_diff_eq!(f.coeff(n).re, 1.0, epsilon = 1e-10);
            assert_abs_diff_eq!(f.coeff(n).im, 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn from_log_derivative_identity() {
        let p = PowerSeries::constant(ONE, 32);
        let f = from_log_derivative(&p).unwrap();
        assert!(f.is_normalized());
        for n in 2..=32 {
            assert!(f.coeff(n).norm() < 1e-12);
        }
    }

    #[test]
    fn from_log_derivative_matches_janowski_extremal() {
        // p = (1+2z)/(1+z) -> f = z(1+z)
        let mut num = vec![Complex64::default(); 129];
        num[0] = ONE;
        num[1] = c(2.0);
        let mut den = vec![Complex64::default(); 129];
        den[0] = ONE;
        den[1] = ONE;
        let p = PowerSeries::new(num)
            .unwrap()
            .mul(&PowerSeries::new(den).unwrap().reciprocal().unwrap());
        let f = from_log_derivative(&p).unwrap();
        assert_abs_diff_eq!(f.coeff(1).re, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(f.coeff(2).re, 1.0, epsilon = 1e-10);
        for n in 3..=120 {
            assert!(f.coeff(n).norm() < 1e-9, "coefficient {n} = {}", f.coeff(n));
        }
    }

    #[test]
    fn convexity_profile_half_plane_gives_half_plane_extremal() {
        // q = (1+z)/(1-z) -> g = z/(1-z)
        let mut num = vec![Complex64::default(); 129];
        num[0] = ONE;
        num[1] = ONE;
        let mut den = vec![Complex64::default(); 129];
        den[0] = ONE;
        den[1] = -ONE;
        let q = PowerSeries::new(num)
            .unwrap()
            .mul(&PowerSeries::new(den).unwrap().reciprocal().unwrap());
        let g = from_convexity_profile(&q).unwrap();
        for n in 1..=120 {
            assert_abs_diff_eq!(g.coeff(n).re, 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn roundtrip_log_derivative() {
        let spec = ClassSpec::StarlikeOrder { alpha: 0.3 };
        let f = sample_member(&spec, 11).unwrap();
        let (p, _) = log_derivative_functionals(&f).unwrap();
        let g = from_log_derivative(&p).unwrap();
        for n in 0..=200 {
            assert!((f.coeff(n) - g.coeff(n)).norm() < 1e-10, "coefficient {n}");
        }
    }

    #[test]
    fn schur_sample_basics() {
        let w = schur_sample(3, 0);
        assert_eq!(w, PowerSeries::var(DEFAULT_ORDER));
        let w = schur_sample(7, 2);
        assert!(w.coeff(0).norm() < 1e-14);
        assert!(w.coeff(1).norm() <= 1.0 + 1e-12);
        let max: f64 = (0..360)
            .map(|j| {
                w.eval(Complex64::from_polar(0.9, 2.0 * PI * j as f64 / 360.0))
                    .unwrap()
                    .value
                    .norm()
            })
            .fold(0.0, f64::max);
        assert!(max <= 0.9 + 1e-9, "max |omega| = {max}");
    }

    #[test]
    fn sample_members_pass_membership() {
        let specs = [
            ClassSpec::StarlikeOrder { alpha: 0.0 },
            ClassSpec::StarlikeOrder { alpha: 0.5 },
            ClassSpec::ConvexOrder { alpha: 0.25 },
            ClassSpec::JanowskiStarlike { a: c(2.0), b: c(-1.0) },
            ClassSpec::JanowskiConvex { a: c(2.0), b: c(1.0) },
            ClassSpec::GBeta { beta: 1.0 },
        ];
        for spec in &specs {
            for seed in [1, 2, 3] {
                // sample_member re-checks membership internally
                let f = sample_member(spec, seed).unwrap();
                assert!(f.is_normalized());
            }
        }
    }

    #[test]
    fn sampling_unsupported_classes() {
        assert!(matches!(
            sample_member(&ClassSpec::Univalent, 1),
            Err(Error::UnsupportedSpec(_))
        ));
        assert!(matches!(
            sample_member(&ClassSpec::BoundaryRotation { k: 4.0 }, 1),
            Err(Error::UnsupportedSpec(_))
        ));
    }

    #[test]
    fn koebe_is_starlike_not_convex() {
        let grid = GridSpec::membership();
        let m = check_membership(&koebe(), &ClassSpec::StarlikeOrder { alpha: 0.0 }, 0.99, &grid)
            .unwrap();
        assert!(m >= -1e-9, "margin {m}");
        let m = check_membership(&koebe(), &ClassSpec::ConvexOrder { alpha: 0.0 }, 0.5, &grid)
            .unwrap();
        assert!(m < 0.0, "Koebe is not convex past 2-sqrt(3), margin {m}");
    }

    #[test]
    fn identity_is_convex_any_order() {
        let grid = GridSpec::membership();
        for alpha in [0.0, 0.5, 0.9] {
            let m = check_membership(
                &AnalyticFn::identity(),
                &ClassSpec::ConvexOrder { alpha },
                0.99,
                &grid,
            )
            .unwrap();
            assert_abs_diff_eq!(m, 1.0 - alpha, epsilon = 1e-12);
        }
    }

    #[test]
    fn extremals_pass_their_own_class() {
        let specs = [
            ClassSpec::StarlikeOrder { alpha: 0.0 },
            ClassSpec::StarlikeOrder { alpha: 0.5 },
            ClassSpec::ConvexOrder { alpha: 0.0 },
            ClassSpec::ConvexOrder { alpha: 0.5 },
            ClassSpec::JanowskiStarlike { a: c(2.0), b: c(1.0) },
            ClassSpec::JanowskiStarlike { a: c(2.0), b: c(-1.0) },
            ClassSpec::JanowskiConvex { a: c(2.0), b: c(1.0) },
            ClassSpec::GBeta { beta: 0.5 },
            ClassSpec::GBeta { beta: 1.0 },
            ClassSpec::BoundaryRotation { k: 2.0 },
            ClassSpec::BoundaryRotation { k: 4.0 },
            ClassSpec::UniversalLif { gamma: 1.0 },
            ClassSpec::UniversalLif { gamma: 2.0 },
            ClassSpec::Univalent,
        ];
        let grid = GridSpec::membership();
        for spec in &specs {
            let f = extremal(spec).unwrap();
            let m = check_membership(&f, spec, 0.95, &grid).unwrap();
            assert!(m >= -1e-8, "{} margin {m}", spec.label());
        }
    }

    #[test]
    fn koebe_lif_order_at_most_two() {
        let grid = GridSpec::membership();
        let m = check_membership(&koebe(), &ClassSpec::LifOrder { delta: 2.0 }, 0.95, &grid)
            .unwrap();
        assert!(m >= -1e-6, "order functional exceeded 2 by {}", -m);
    }

    #[test]
    fn lif_transform_identity_map() {
        let f = koebe();
        let t = lif_transform(&f, &MoebiusParams::identity());
        for z in [c(0.3), Complex64::new(0.1, -0.4)] {
            let (a, b) = (f.eval(z).unwrap(), t.eval(z).unwrap());
            assert_abs_diff_eq!((a.value - b.value).norm(), 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!((a.d1 - b.d1).norm(), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn lif_transform_of_identity_function() {
        // f = z, theta = 0: F(z) = z/(1 + conj(a) z)
        let a = Complex64::new(0.3, 0.2);
        let phi = MoebiusParams::new(a, 0.0).unwrap();
        let t = lif_transform(&AnalyticFn::identity(), &phi);
        for j in 0..10 {
            let z = Complex64::from_polar(0.05 + 0.04 * j as f64, 0.6 * j as f64);
            let got = t.eval(z).unwrap().value;
            let want = z / (ONE + a.conj() * z);
            assert_abs_diff_eq!((got - want).norm(), 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn convex_class_is_linear_invariant() {
        let g = extremal(&ClassSpec::ConvexOrder { alpha: 0.0 }).unwrap();
        let phi = MoebiusParams::new(Complex64::new(0.4, -0.25), 1.1).unwrap();
        let t = lif_transform(&g, &phi);
        let m = check_membership(&t, &ClassSpec::ConvexOrder { alpha: 0.0 }, 0.55, &GridSpec::membership())
            .unwrap();
        assert!(m >= -1e-8, "margin {m}");
    }

    #[test]
    fn lif_transform_composition() {
        let f = extremal(&ClassSpec::ConvexOrder { alpha: 0.0 }).unwrap();
        let p1 = MoebiusParams::new(Complex64::new(0.2, 0.1), 0.4).unwrap();
        let p2 = MoebiusParams::new(Complex64::new(-0.15, 0.3), 1.7).unwrap();
        let t12 = lif_transform(&lif_transform(&f, &p1), &p2);
        // composed Moebius map: phi1(phi2(z)) up to the normalization constants
        // that the transform divides out, so compare against the direct
        // two-step evaluation
        let direct = |z: Complex64| {
            let w = p1.apply(p2.apply(z));
            f.eval_raw(w).value
        };
        let w0 = direct(Complex64::default());
        let z1 = c(0.2);
        let z2 = c(0.35);
        // t12 is an affine renormalization of z -> f(phi1(phi2(z))); cross-ratio
        // of three evaluations is invariant under affine maps
        let ratio_t = (t12.eval(z2).unwrap().value - t12.eval(z1).unwrap().value)
            / (t12.eval(z1).unwrap().value - t12.eval(Complex64::default()).unwrap().value);
        let ratio_d = (direct(z2) - direct(z1)) / (direct(z1) - w0);
        assert_abs_diff_eq!((ratio_t - ratio_d).norm(), 0.0, epsilon = 1e-9);
    }

    #[test]
    fn class_spec_json() {
        let spec = ClassSpec::JanowskiStarlike { a: c(2.0), b: c(-1.0) };
        let j = serde_json::to_string(&ClassSpecJson::from(&spec)).unwrap();
        assert_eq!(j, r#"{"tag":"JanowskiStarlike","A":[2.0,0.0],"B":[-1.0,0.0]}"#);
        let j = serde_json::to_string(&ClassSpecJson::from(&ClassSpec::GBeta { beta: 1.0 })).unwrap();
        assert_eq!(j, r#"{"tag":"GBeta","beta":1.0}"#);
    }
}
