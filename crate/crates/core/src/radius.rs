//! Closed-form radius-of-convexity formulas for `T_g` together with an
//! independent bisection oracle for the proof polynomials.
//!
//! Each theorem reduces to the positivity of a real polynomial in the radius:
//!
//! - Janowski pair: `phi(r) = 2 - a - 2|B-A| r - (2 Re{A conj(B)} - a|B|^2) r^2`
//! - starlike x linear-invariant: `psi(r) = 1 + a - 2 g r + (1 - a) r^2`
//! - starlike x bounded rotation: `lambda(r) = (1 - a) r^2 - k r + 1 + a`
//!
//! The closed forms pick the smallest positive root; [`quad_root_oracle`]
//! recovers the same number by sign-change bisection and serves as the
//! cross-check in the test suite.

use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

/// Which root expression produced the radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Quadratic,
    Linear,
    WholeDisc,
}

/// A radius of convexity in `(0, 1]`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RadiusValue {
    pub r: f64,
    pub branch: Branch,
}

impl RadiusValue {
    fn capped(r: f64, branch: Branch) -> Self {
        if r >= 1.0 - 1e-15 {
            Self { r: 1.0, branch: Branch::WholeDisc }
        } else {
            Self { r, branch }
        }
    }
}

/// A theorem selector with its parameters.
#[derive(Debug, Clone, Copy)]
pub enum RadiusQuery {
    /// `f` Janowski starlike, `g` Janowski convex.
    T41 { alpha: f64, a: Complex64, b: Complex64 },
    /// `f` starlike of order alpha, `g` in the universal LIF of order gamma.
    T42 { alpha: f64, gamma: f64 },
    /// `f` starlike of order alpha, `g` in a LIF of order 1: whole disc.
    T43 { alpha: f64 },
    /// `f` starlike of order alpha, `g` univalent.
    T44 { alpha: f64 },
    /// `f` starlike of order alpha, `g` in G(beta).
    T45 { alpha: f64, beta: f64 },
    /// `f` starlike of order alpha, `g` of boundary rotation at most k pi.
    T46 { alpha: f64, k: f64 },
}

impl RadiusQuery {
    pub fn theorem_name(&self) -> &'static str {
        match self {
            Self::T41 { .. } => "t41",
            Self::T42 { .. } => "t42",
            Self::T43 { .. } => "t43",
            Self::T44 { .. } => "t44",
            Self::T45 { .. } => "t45",
            Self::T46 { .. } => "t46",
        }
    }

    pub fn alpha(&self) -> f64 {
        match *self {
            Self::T41 { alpha, .. }
            | Self::T42 { alpha, .. }
            | Self::T43 { alpha }
            | Self::T44 { alpha }
            | Self::T45 { alpha, .. }
            | Self::T46 { alpha, .. } => alpha,
        }
    }

    /// Order of convexity claimed for `T_g`: `alpha` for the Janowski pair,
    /// plain convexity for the remaining theorems (there `alpha` only
    /// constrains the starlike factor).
    pub fn convexity_order(&self) -> f64 {
        match *self {
            Self::T41 { alpha, .. } => alpha,
            _ => 0.0,
        }
    }

    fn validate(&self) -> Result<()> {
        let alpha = self.alpha();
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::InvalidParams(format!("alpha must lie in [0,1), got {alpha}")));
        }
        match *self {
            Self::T41 { a, b, .. } => {
                if a.norm() <= 1.0 {
                    return Err(Error::InvalidParams(format!("|A| must be > 1, got {}", a.norm())));
                }
                if b.norm() > 1.0 + 1e-12 {
                    return Err(Error::InvalidParams(format!("|B| must be <= 1, got {}", b.norm())));
                }
            }
            Self::T42 { gamma, .. } => {
                if gamma < 1.0 {
                    return Err(Error::InvalidParams(format!("gamma must be >= 1, got {gamma}")));
                }
            }
            Self::T45 { beta, .. } => {
                if !(beta > 0.0 && beta <= 1.0) {
                    return Err(Error::InvalidParams(format!("beta must lie in (0,1], got {beta}")));
                }
            }
            Self::T46 { k, .. } => {
                if k < 2.0 {
                    return Err(Error::InvalidParams(format!("k must be >= 2, got {k}")));
                }
            }
            Self::T43 { .. } | Self::T44 { .. } => {}
        }
        Ok(())
    }

    /// Coefficients `(c2, c1, c0)` of the proof polynomial whose smallest
    /// positive root is the radius.
    pub fn proof_polynomial(&self) -> (f64, f64, f64) {
        match *self {
            Self::T41 { alpha, a, b } => (
                alpha * b.norm_sqr() - 2.0 * (a * b.conj()).re,
                -2.0 * (b - a).norm(),
                2.0 - alpha,
            ),
            Self::T42 { alpha, gamma } => (1.0 - alpha, -2.0 * gamma, 1.0 + alpha),
            Self::T43 { alpha } => (1.0 - alpha, -2.0, 1.0 + alpha),
            Self::T44 { alpha } => (1.0 - alpha, -4.0, 1.0 + alpha),
            Self::T45 { alpha, beta } => (0.0, -(1.0 + alpha + beta), 1.0 + alpha),
            Self::T46 { alpha, k } => (1.0 - alpha, -k, 1.0 + alpha),
        }
    }
}

/// The Janowski-pair radius: `(2-alpha)/(2|A|)` when `B = 0`, else the
/// smallest positive root of the proof quadratic.
pub fn radius_janowski(a: Complex64, b: Complex64, alpha: f64) -> Result<RadiusValue> {
    let q = RadiusQuery::T41 { alpha, a, b };
    q.validate()?;
    if b.norm() < 1e-14 {
        return Ok(RadiusValue::capped((2.0 - alpha) / (2.0 * a.norm()), Branch::Linear));
    }
    let (c2, c1, c0) = q.proof_polynomial();
    smallest_positive_root(c2, c1, c0)
}

/// Evaluates the closed form of the selected theorem.
pub fn radius_formula(q: &RadiusQuery) -> Result<RadiusValue> {
    q.validate()?;
    let alpha = q.alpha();
    Ok(match *q {
        RadiusQuery::T41 { alpha, a, b } => radius_janowski(a, b, alpha)?,
        RadiusQuery::T42 { gamma, .. } => RadiusValue::capped(
            (gamma - (alpha * alpha + gamma * gamma - 1.0).sqrt()) / (1.0 - alpha),
            Branch::Quadratic,
        ),
        RadiusQuery::T43 { .. } => RadiusValue { r: 1.0, branch: Branch::WholeDisc },
        RadiusQuery::T44 { .. } => RadiusValue::capped(
            (2.0 - (3.0 + alpha * alpha).sqrt()) / (1.0 - alpha),
            Branch::Quadratic,
        ),
        RadiusQuery::T45 { beta, .. } => {
            RadiusValue::capped((1.0 + alpha) / (1.0 + alpha + beta), Branch::Linear)
        }
        RadiusQuery::T46 { k, .. } => RadiusValue::capped(
            (k - (k * k - 4.0 * (1.0 - alpha * alpha)).sqrt()) / (2.0 * (1.0 - alpha)),
            Branch::Quadratic,
        ),
    })
}

/// Smallest root of `c0 + c1 r + c2 r^2` in `(0, 1]` by closed form with
/// explicit sign analysis; whole-disc when the polynomial stays positive on
/// `[0, 1)`.
fn smallest_positive_root(c2: f64, c1: f64, c0: f64) -> Result<RadiusValue> {
    if c0 <= 0.0 {
        return Err(Error::NoPositiveStart);
    }
    if c2.abs() < 1e-14 {
        if c1 >= 0.0 {
            return Ok(RadiusValue { r: 1.0, branch: Branch::WholeDisc });
        }
        return Ok(RadiusValue::capped(-c0 / c1, Branch::Linear));
    }
    let disc = c1 * c1 - 4.0 * c2 * c0;
    if disc < 0.0 {
        // no real root; positive at 0 means positive everywhere
        return Ok(RadiusValue { r: 1.0, branch: Branch::WholeDisc });
    }
    let sq = disc.sqrt();
    // numerically stable split of the two roots
    let q = -0.5 * (c1 + c1.signum() * sq);
    let mut roots = [q / c2, c0 / q];
    roots.sort_by(f64::total_cmp);
    let smallest = roots.into_iter().find(|&r| r > 0.0);
    match smallest {
        Some(r) if r < 1.0 => Ok(RadiusValue { r, branch: Branch::Quadratic }),
        _ => Ok(RadiusValue { r: 1.0, branch: Branch::WholeDisc }),
    }
}

/// Independent cross-check: bisection on the sign change of
/// `p(r) = c0 + c1 r + c2 r^2` over `[0, 1]` to absolute tolerance `1e-12`.
pub fn quad_root_oracle(c2: f64, c1: f64, c0: f64) -> Result<RadiusValue> {
    let p = |r: f64| c0 + c1 * r + c2 * r * r;
    // sign threshold above rounding noise, so that double roots touching zero
    // (cancellation can produce tiny negatives) do not register as crossings
    let eps = 1e-13 * (c0.abs() + c1.abs() + c2.abs());
    if p(0.0) <= 0.0 {
        return Err(Error::NoPositiveStart);
    }
    let hi = 1.0 - 1e-12;
    let steps = 4096;
    let mut lo = 0.0;
    let mut bracket = None;
    for i in 1..=steps {
        let r = hi * i as f64 / steps as f64;
        if p(r) < -eps {
            bracket = Some((lo, r));
            break;
        }
        lo = r;
    }
    let Some((mut lo, mut hi)) = bracket else {
        return Ok(RadiusValue { r: 1.0, branch: Branch::WholeDisc });
    };
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if p(mid) < -eps {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(RadiusValue { r: 0.5 * (lo + hi), branch: Branch::Quadratic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn janowski_corollaries() {
        // A=2, B=1: (2-alpha)/(4-alpha) at alpha=0 is 1/2
        assert_abs_diff_eq!(radius_janowski(c(2.0), c(1.0), 0.0).unwrap().r, 0.5);
        // A=2, B=-1: (2-alpha)/(4+alpha) at alpha=0 is 1/2
        assert_abs_diff_eq!(radius_janowski(c(2.0), c(-1.0), 0.0).unwrap().r, 0.5);
        // B=0 linear branch
        let v = radius_janowski(c(2.0), c(0.0), 0.0).unwrap();
        assert_abs_diff_eq!(v.r, 0.5);
        assert_eq!(v.branch, Branch::Linear);
    }

    #[test]
    fn janowski_corollary_formulas_over_alpha() {
        for alpha in [0.0, 0.25, 0.5, 0.75, 0.99] {
            assert_abs_diff_eq!(
                radius_janowski(c(2.0), c(1.0), alpha).unwrap().r,
                (alpha - 2.0) / (alpha - 4.0),
                epsilon = 1e-12
            );
            assert_abs_diff_eq!(
                radius_janowski(c(2.0), c(-1.0), alpha).unwrap().r,
                (2.0 - alpha) / (4.0 + alpha),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn janowski_domain_enforced() {
        assert!(radius_janowski(c(0.5), c(0.0), 0.0).is_err());
        assert!(radius_janowski(c(2.0), c(1.5), 0.0).is_err());
        assert!(radius_janowski(c(2.0), c(1.0), 1.0).is_err());
    }

    #[test]
    fn formula_values() {
        let v = radius_formula(&RadiusQuery::T42 { alpha: 0.0, gamma: 1.0 }).unwrap();
        assert_abs_diff_eq!(v.r, 1.0);
        assert_eq!(v.branch, Branch::WholeDisc);
        assert_abs_diff_eq!(
            radius_formula(&RadiusQuery::T44 { alpha: 0.0 }).unwrap().r,
            2.0 - 3.0_f64.sqrt(),
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(radius_formula(&RadiusQuery::T46 { alpha: 0.0, k: 2.0 }).unwrap().r, 1.0);
        assert_abs_diff_eq!(
            radius_formula(&RadiusQuery::T45 { alpha: 0.0, beta: 1.0 }).unwrap().r,
            0.5
        );
        assert_abs_diff_eq!(radius_formula(&RadiusQuery::T43 { alpha: 0.3 }).unwrap().r, 1.0);
    }

    #[test]
    fn oracle_examples() {
        // phi for A=2, B=1, alpha=0
        let q = RadiusQuery::T41 { alpha: 0.0, a: c(2.0), b: c(1.0) };
        let (c2, c1, c0) = q.proof_polynomial();
        assert_abs_diff_eq!(quad_root_oracle(c2, c1, c0).unwrap().r, 0.5, epsilon = 1e-10);
        // psi for alpha=0, gamma=2: 1 - 4r + r^2
        assert_abs_diff_eq!(
            quad_root_oracle(1.0, -4.0, 1.0).unwrap().r,
            2.0 - 3.0_f64.sqrt(),
            epsilon = 1e-10
        );
        // constant positive polynomial
        assert_eq!(quad_root_oracle(0.0, 0.0, 1.0).unwrap().branch, Branch::WholeDisc);
        // nonpositive start
        assert!(matches!(quad_root_oracle(0.0, 1.0, -1.0), Err(Error::NoPositiveStart)));
    }

    fn ring(n: usize, modulus: f64) -> impl Iterator<Item = Complex64> {
        (0..n).map(move |j| Complex64::from_polar(modulus, 2.0 * std::f64::consts::PI * j as f64 / n as f64))
    }

    #[test]
    fn formula_agrees_with_oracle_on_sweep() {
        let alphas = [0.0, 0.25, 0.5, 0.75, 0.99];
        for &alpha in &alphas {
            for am in [1.1, 2.0, 5.0] {
                for a in ring(8, am) {
                    for bm in [0.0, 0.5, 1.0] {
                        for b in ring(8, bm) {
                            let v = radius_janowski(a, b, alpha).unwrap();
                            let q = RadiusQuery::T41 { alpha, a, b };
                            let (c2, c1, c0) = q.proof_polynomial();
                            let o = quad_root_oracle(c2, c1, c0).unwrap();
                            assert!(
                                (v.r - o.r).abs() < 1e-10,
                                "A={a} B={b} alpha={alpha}: formula {} oracle {}",
                                v.r,
                                o.r
                            );
                        }
                    }
                }
            }
            for q in [
                RadiusQuery::T42 { alpha, gamma: 1.0 },
                RadiusQuery::T42 { alpha, gamma: 2.0 },
                RadiusQuery::T42 { alpha, gamma: 4.0 },
                RadiusQuery::T44 { alpha },
                RadiusQuery::T45 { alpha, beta: 0.25 },
                RadiusQuery::T45 { alpha, beta: 1.0 },
                RadiusQuery::T46 { alpha, k: 2.0 },
                RadiusQuery::T46 { alpha, k: 4.0 },
                RadiusQuery::T46 { alpha, k: 8.0 },
            ] {
                let v = radius_formula(&q).unwrap();
                let (c2, c1, c0) = q.proof_polynomial();
                let o = quad_root_oracle(c2, c1, c0).unwrap();
                assert!(
                    (v.r - o.r).abs() < 1e-10,
                    "{:?}: formula {} oracle {}",
                    q,
                    v.r,
                    o.r
                );
            }
        }
    }

    #[test]
    fn monotonicity_and_range() {
        let alphas = [0.0, 0.25, 0.5, 0.75, 0.99];
        for &alpha in &alphas {
            // nonincreasing in |A| on the B=0 branch
            let mut prev = f64::INFINITY;
            for am in [1.1, 2.0, 5.0] {
                let r = radius_janowski(c(am), c(0.0), alpha).unwrap().r;
                assert!(r <= prev + 1e-15 && r > 0.0 && r <= 1.0);
                prev = r;
            }
            // nonincreasing in gamma, k, beta
            let mut prev = f64::INFINITY;
            for gamma in [1.0, 2.0, 4.0] {
                let r = radius_formula(&RadiusQuery::T42 { alpha, gamma }).unwrap().r;
                assert!(r <= prev + 1e-15 && r > 0.0 && r <= 1.0);
                prev = r;
            }
            let mut prev = f64::INFINITY;
            for k in [2.0, 4.0, 8.0] {
                let r = radius_formula(&RadiusQuery::T46 { alpha, k }).unwrap().r;
                assert!(r <= prev + 1e-15 && r > 0.0 && r <= 1.0);
                prev = r;
            }
            let mut prev = f64::INFINITY;
            for beta in [0.25, 1.0] {
                let r = radius_formula(&RadiusQuery::T45 { alpha, beta }).unwrap().r;
                assert!(r <= prev + 1e-15 && r > 0.0 && r <= 1.0);
                prev = r;
            }
        }
    }
}
