//! Radius-of-convexity computations for the Volterra-type integral operator
//!
//! The operator under study is
//!
//! ```text
//! T_g f(z) = ∫₀^z f(s) g'(s) ds        (|z| < 1)
//! ```
//!
//! for analytic `f`, `g` on the open unit disc. When `f` ranges over a
//! starlike-type class and `g` over a convex-type class, `T_g` is convex (of a
//! given order α) on a disc whose radius admits a closed form. This crate
//! implements those closed forms, the function classes and their extremal
//! members, and a grid/bisection estimator that certifies each formula as a
//! lower bound numerically.
//!
//! Module map:
//! - [`series`]: truncated complex power-series arithmetic;
//! - [`families`]: function classes, extremals, random members, membership checks;
//! - [`volterra`]: the operators `T_g`, `J_g`, `M_g` and the convexity functional;
//! - [`radius`]: closed-form radius formulas plus a bisection root oracle;
//! - [`verify`]: numerical radius estimation, lemma audits, theorem reports;
//! - [`cli`]: the `volterra-radius` command-line surface.
//!
//! ```
//! use volterra_radius::radius::{radius_formula, RadiusQuery};
//!
//! let r = radius_formula(&RadiusQuery::T44 { alpha: 0.0 }).unwrap();
//! assert!((r.r - (2.0 - 3.0_f64.sqrt())).abs() < 1e-12);
//! ```

pub mod cli;
pub mod families;
pub mod radius;
pub mod series;
pub mod verify;
pub mod volterra;

/// Doc-tests the code snippets embedded in the mdBook guide so the book and
/// the library cannot drift apart.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(series, "../../../book/src/series.md");
    chapter!(families, "../../../book/src/families.md");
    chapter!(operator, "../../../book/src/operator.md");
    chapter!(radius, "../../../book/src/radius.md");
    chapter!(verification, "../../../book/src/verification.md");
}

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("coefficient is not finite")]
    NonFinite,
    #[error("operation requires a nonzero constant term")]
    ZeroConstantTerm,
    #[error("operation requires a zero constant term")]
    NonzeroConstantTerm,
    #[error("series must have constant term 1")]
    ConstantTermNotOne,
    #[error("evaluation radius {r} exceeds the trusted radius {r_max}")]
    RadiusTooLarge { r: f64, r_max: f64 },
    #[error("truncation tail estimate {tail:.3e} exceeds tolerance {tol:.3e}")]
    TruncationUnreliable { tail: f64, tol: f64 },
    #[error("unsupported class specification: {0}")]
    UnsupportedSpec(String),
    #[error("constructed sample failed its own membership check (margin {margin:.3e})")]
    MembershipCheckFailed { margin: f64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("pole at evaluation point z = {z}")]
    PoleAtEvaluationPoint { z: num_complex::Complex64 },
    #[error("polynomial is nonpositive at r = 0; hypothesis is vacuous")]
    NoPositiveStart,
    #[error("convexity hypothesis violated at the origin for pair {0}")]
    HypothesisViolatedAtOrigin(String),
}

pub type Result<T> = std::result::Result<T, Error>;
