//! Truncated complex power-series arithmetic.
//!
//! A [`PowerSeries`] holds Taylor coefficients `a_0..a_N` about the origin and
//! supports the ring operations, termwise calculus, and the transcendental
//! recurrences (reciprocal, log, exp, complex powers) needed to build and
//! probe analytic functions on the unit disc. Everything is plain `f64`
//! double precision; evaluation is restricted to `|z| <= R_MAX` where the
//! truncation tail of the functions we care about is negligible.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest radius at which series evaluation is trusted.
pub const R_MAX: f64 = 0.95;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 256;

/// Minimum truncation order accepted by constructors.
pub const MIN_ORDER: usize = 8;

/// Tolerance below which a coefficient is treated as zero when checking
/// structural preconditions (normalization, constant terms).
const COEFF_TOL: f64 = 1e-12;

/// A power series truncated at degree `N = coeffs.len() - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

/// Value and first two derivatives of a series (or closed-form function) at a
/// point, together with a crude truncation-tail estimate `|a_N| |z|^N N^2`.
/// Closed-form evaluators report a tail of zero.
#[derive(Debug, Clone, Copy)]
pub struct EvalResult {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub tail: f64,
}

impl PowerSeries {
    /// Builds a series from explicit coefficients `a_0..a_N`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < MIN_ORDER + 1 {
            return Err(Error::InvalidParams(format!(
                "truncation order must be at least {MIN_ORDER}, got {}",
                coeffs.len().saturating_sub(1)
            )));
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { coeffs })
    }

    /// The zero series of the given truncation order.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Complex64::new(0.0, 0.0); order.max(MIN_ORDER) + 1] }
    }

    /// The constant series `c`.
    pub fn constant(c: Complex64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The identity series `z`.
    pub fn var(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[1] = Complex64::new(1.0, 0.0);
        s
    }

    /// Builds a series from the leading real coefficients, zero-padded to `order`.
    pub fn from_real(lead: &[f64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, &c) in lead.iter().enumerate().take(s.coeffs.len()) {
            s.coeffs[i] = Complex64::new(c, 0.0);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// True when `a_0 = 0` and `a_1 = 1` up to rounding.
    pub fn is_normalized(&self) -> bool {
        self.coeffs[0].norm() <= COEFF_TOL
            && (self.coeffs[1] - Complex64::new(1.0, 0.0)).norm() <= COEFF_TOL
    }

    fn binary(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f(self.coeff(i), other.coeff(i))).collect();
        Self { coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.binary(other, |a, b| a - b)
    }

    /// Cauchy product truncated at the larger of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Complex64::default(); n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == Complex64::default() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|&a| a * c).collect() }
    }

    /// Termwise derivative; the truncation order is preserved (top coefficient
    /// becomes zero).
    pub fn differentiate(&self) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::default(); n];
        for k in 1..n {
            coeffs[k - 1] = self.coeffs[k] * k as f64;
        }
        Self { coeffs }
    }

    /// Antiderivative with constant term zero; the degree-`N` input coefficient
    /// is dropped to preserve the truncation order.
    pub fn integrate(&self) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::default(); n];
        for k in 1..n {
            coeffs[k] = self.coeffs[k - 1] / k as f64;
        }
        Self { coeffs }
    }

    /// Multiplication by `z` (coefficient shift up, top coefficient dropped).
    pub fn shift_up(&self) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::default(); n];
        coeffs[1..n].copy_from_slice(&self.coeffs[..n - 1]);
        Self { coeffs }
    }

    /// Division by `z`; requires `a_0 = 0`.
    pub fn shift_down(&self) -> Result<Self> {
        if self.coeffs[0].norm() > COEFF_TOL {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![Complex64::default(); n];
        coeffs[..n - 1].copy_from_slice(&self.coeffs[1..]);
        Ok(Self { coeffs })
    }

    /// Multiplicative inverse; requires `a_0 != 0`.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() <= COEFF_TOL {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.coeffs.len();
        let mut b = vec![Complex64::default(); n];
        b[0] = a0.inv();
        for k in 1..n {
            let mut acc = Complex64::default();
            for j in 1..=k {
                acc += self.coeffs[j] * b[k - j];
            }
            b[k] = -acc / a0;
        }
        Ok(Self { coeffs: b })
    }

    /// Principal-branch logarithm; requires `a_0 != 0`.
    pub fn log(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0.norm() <= COEFF_TOL {
            return Err(Error::ZeroConstantTerm);
        }
        let n = self.coeffs.len();
        let mut b = vec![Complex64::default(); n];
        b[0] = a0.ln();
        for k in 1..n {
            let mut acc = Complex64::default();
            for j in 1..k {
                acc += b[j] * self.coeffs[k - j] * j as f64;
            }
            b[k] = (self.coeffs[k] - acc / k as f64) / a0;
        }
        Ok(Self { coeffs: b })
    }

    /// Exponential; requires `a_0 = 0`.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs[0].norm() > COEFF_TOL {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.coeffs.len();
        let mut b = vec![Complex64::default(); n];
        b[0] = Complex64::new(1.0, 0.0);
        for k in 1..n {
            let mut acc = Complex64::default();
            for j in 1..=k {
                acc += self.coeffs[j] * b[k - j] * j as f64;
            }
            b[k] = acc / k as f64;
        }
        Ok(Self { coeffs: b })
    }

    /// Principal-branch power `a^c = exp(c log a)`; requires `a_0 != 0`.
    pub fn pow(&self, c: Complex64) -> Result<Self> {
        let mut l = self.log()?;
        let l0 = l.coeffs[0];
        l.coeffs[0] = Complex64::default();
        let e = l.scale(c).exp()?;
        Ok(e.scale((c * l0).exp()))
    }

    /// Horner evaluation of value, first and second derivative at `z`.
    ///
    /// Fails with [`Error::RadiusTooLarge`] beyond [`R_MAX`]; the returned
    /// tail estimate lets callers reject evaluations the truncation cannot
    /// support.
    pub fn eval(&self, z: Complex64) -> Result<EvalResult> {
        if z.norm() > R_MAX + 1e-15 {
            return Err(Error::RadiusTooLarge { r: z.norm(), r_max: R_MAX });
        }
        Ok(self.eval_unchecked(z))
    }

    /// Same as [`eval`](Self::eval) without the radius guard. Used internally
    /// where the caller already controls the radius.
    pub fn eval_unchecked(&self, z: Complex64) -> EvalResult {
        let mut v = Complex64::default();
        let mut d1 = Complex64::default();
        let mut d2 = Complex64::default();
        for &a in self.coeffs.iter().rev() {
            d2 = d2 * z + d1;
            d1 = d1 * z + v;
            v = v * z + a;
        }
        let n = self.order();
        let tail = self.coeffs[n].norm() * z.norm().powi(n as i32) * (n * n) as f64;
        EvalResult { value: v, d1, d2: d2 * 2.0, tail }
    }
}

/// Computes `p = z f'/f` and `q = 1 + z f''/f'` as series for a normalized `f`.
///
/// Both functionals extend analytically through the origin with value 1.
pub fn log_derivative_functionals(f: &PowerSeries) -> Result<(PowerSeries, PowerSeries)> {
    if !f.is_normalized() {
        return Err(Error::ConstantTermNotOne);
    }
    let h = f.shift_down()?; // f/z, constant term 1
    let fp = f.differentiate();
    let p = fp.mul(&h.reciprocal()?);
    let fpp = fp.differentiate();
    let one = PowerSeries::constant(Complex64::new(1.0, 0.0), f.order());
    let q = fpp.mul(&fp.reciprocal()?).shift_up().add(&one);
    Ok((p, q))
}

/// JSON wire form of a series: `{"order": N, "coeffs": [[re, im], ...]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<[f64; 2]>,
}

impl From<&PowerSeries> for SeriesJson {
    fn from(s: &PowerSeries) -> Self {
        SeriesJson {
            order: s.order(),
            coeffs: s.coeffs().iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

impl TryFrom<SeriesJson> for PowerSeries {
    type Error = Error;

    fn try_from(j: SeriesJson) -> Result<Self> {
        if j.coeffs.len() != j.order + 1 {
            return Err(Error::InvalidParams(format!(
                "coefficient count {} does not match order {}",
                j.coeffs.len(),
                j.order
            )));
        }
        PowerSeries::new(j.coeffs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn geometric(order: usize) -> PowerSeries {
        PowerSeries::new(vec![c(1.0); order + 1]).unwrap()
    }

    /// Koebe function z/(1-z)^2, coefficients a_n = n.
    fn koebe(order: usize) -> PowerSeries {
        PowerSeries::new((0..=order).map(|n| c(n as f64)).collect()).unwrap()
    }

    #[test]
    fn polynomial_product() {
        let a = PowerSeries::from_real(&[1.0, 1.0], 8);
        let b = PowerSeries::from_real(&[1.0, -1.0], 8);
        let p = a.mul(&b);
        assert_abs_diff_eq!(p.coeff(0).re, 1.0);
        assert_abs_diff_eq!(p.coeff(1).norm(), 0.0);
        assert_abs_diff_eq!(p.coeff(2).re, -1.0);
        for n in 3..=8 {
            assert_abs_diff_eq!(p.coeff(n).norm(), 0.0);
        }
    }

    #[test]
    fn shift_times_squared_geometric_is_koebe() {
        // z * (sum (n+1) z^n) = sum n z^n
        let sq = geometric(32).mul(&geometric(32));
        let k = PowerSeries::var(32).mul(&sq);
        for n in 0..=32 {
            assert_abs_diff_eq!(k.coeff(n).re, n as f64, epsilon = 1e-12);
        }
    }

    #[test]
    fn add_zero_identity() {
        let a = koebe(16);
        let z = PowerSeries::zero(16);
        assert_eq!(a.add(&z), a);
    }

    #[test]
    fn integrate_one_is_z() {
        let one = PowerSeries::constant(c(1.0), 8);
        assert_eq!(one.integrate(), PowerSeries::var(8));
    }

    #[test]
    fn differentiate_geometric_shift() {
        // d/dz z/(1-z) = 1/(1-z)^2, coefficients n+1
        let zg = PowerSeries::var(32).mul(&geometric(32));
        let d = zg.differentiate();
        for n in 0..32 {
            assert_abs_diff_eq!(d.coeff(n).re, (n + 1) as f64, epsilon = 1e-12);
        }
    }

    #[test]
    fn integrate_differentiate_roundtrip() {
        let a = koebe(32);
        let r = a.differentiate().integrate();
        for n in 0..32 {
            assert_abs_diff_eq!((r.coeff(n) - a.coeff(n)).norm(), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn reciprocal_of_one_minus_z() {
        let a = PowerSeries::from_real(&[1.0, -1.0], 16);
        let r = a.reciprocal().unwrap();
        for n in 0..=16 {
            assert_abs_diff_eq!(r.coeff(n).re, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn pow_binomial() {
        let a = PowerSeries::from_real(&[1.0, 1.0], 16);
        let p = a.pow(c(2.0)).unwrap();
        assert_abs_diff_eq!(p.coeff(0).re, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.coeff(1).re, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.coeff(2).re, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.coeff(3).norm(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn exp_log_roundtrip() {
        let a = PowerSeries::from_real(&[1.0, 1.0], 64);
        let r = a.log().unwrap().exp().unwrap();
        assert_abs_diff_eq!(r.coeff(0).re, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.coeff(1).re, 1.0, epsilon = 1e-12);
        for n in 2..=64 {
            assert!(r.coeff(n).norm() < 1e-12);
        }
    }

    #[test]
    fn transcendental_preconditions() {
        let z = PowerSeries::var(8);
        assert!(matches!(z.reciprocal(), Err(Error::ZeroConstantTerm)));
        assert!(matches!(z.log(), Err(Error::ZeroConstantTerm)));
        assert!(matches!(z.pow(c(0.5)), Err(Error::ZeroConstantTerm)));
        let one = PowerSeries::constant(c(1.0), 8);
        assert!(matches!(one.exp(), Err(Error::NonzeroConstantTerm)));
    }

    #[test]
    fn log_derivative_of_half_plane_extremal() {
        // f = z/(1-z): p = z f'/f = 1/(1-z)
        let f = PowerSeries::var(64).mul(&geometric(64));
        let (p, _) = log_derivative_functionals(&f).unwrap();
        for n in 0..=60 {
            assert_abs_diff_eq!(p.coeff(n).re, 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn koebe_convexity_functional_at_half() {
        let f = koebe(256);
        let (_, q) = log_derivative_functionals(&f).unwrap();
        let v = q.eval(c(0.5)).unwrap().value;
        // (1 + 4z + z^2)/(1 - z^2) at z = 0.5 is 13/3
        assert_abs_diff_eq!(v.re, 13.0 / 3.0, epsilon = 1e-9);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-9);
    }

    #[test]
    fn identity_function_functionals() {
        let f = PowerSeries::var(16);
        let (p, q) = log_derivative_functionals(&f).unwrap();
        assert_abs_diff_eq!(p.coeff(0).re, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(q.coeff(0).re, 1.0, epsilon = 1e-12);
        for n in 1..=16 {
            assert!(p.coeff(n).norm() < 1e-12);
            assert!(q.coeff(n).norm() < 1e-12);
        }
    }

    #[test]
    fn eval_geometric() {
        let a = geometric(128);
        let r = a.eval(c(0.5)).unwrap();
        assert_abs_diff_eq!(r.value.re, 2.0, epsilon = 1e-9);
    }

    #[test]
    fn eval_identity() {
        let a = PowerSeries::var(8);
        let z = Complex64::new(0.3, 0.2);
        let r = a.eval(z).unwrap();
        assert_abs_diff_eq!((r.value - z).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!((r.d1 - c(1.0)).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.d2.norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn eval_koebe_closed_form() {
        let a = koebe(256);
        let r = a.eval(c(0.3)).unwrap();
        assert_abs_diff_eq!(r.value.re, 0.3 / (0.7 * 0.7), epsilon = 1e-9);
    }

    #[test]
    fn eval_rejects_large_radius() {
        let a = koebe(64);
        assert!(matches!(a.eval(c(0.97)), Err(Error::RadiusTooLarge { .. })));
    }

    #[test]
    fn json_roundtrip() {
        let a = koebe(16);
        let j = serde_json::to_string(&SeriesJson::from(&a)).unwrap();
        let back: PowerSeries = serde_json::from_str::<SeriesJson>(&j).unwrap().try_into().unwrap();
        assert_eq!(a, back);
    }
}
