//! Large-|y| expansion of `P(x, y)`.
//!
//! Each saddle `t_k` contributes
//!
//! ```text
//! P_k(x, y) ~ √(π/3) / (2^{5/6} y^{1/3})
//!             · exp[3 y^{4/3} 4^{-4/3} e^{-(-1)^k 2iπ/3} - x y^{2/3} 4^{-2/3} e^{-(-1)^k iπ/3} + x²/6]
//!             · Σ_n e^{(-1)^k (2n+1) iπ/6} A_n(x) / y^{2n/3}
//! ```
//!
//! and `P ≈ P₁ + P₂` for `|arg y| ≤ π/8`, `P ≈ P₁` below that sector and
//! `P ≈ P₂` above it, after reflecting `y` into `Re y ≥ 0`.
//! All fractional powers of `y` are principal-branch.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::branch::{cis, principal_log, principal_pow};
use crate::coefficients::{CoefficientTable, MAX_ORDER};
use crate::error::{PearceyError, Result};
use crate::geometry::{Saddle, SECTOR_HALF_WIDTH};

/// Order used when the caller does not choose one.
pub const DEFAULT_ORDER: usize = 5;

/// Below this `|y|` the expansion is flagged as inaccurate.
pub const ACCURACY_WARNING_RADIUS: f64 = 5.0;

/// `|y|` at and above which the `auto` method picks the expansion.
pub const AUTO_THRESHOLD: f64 = 8.0;

/// Anti-Stokes rays sit at `arg y = ±3π/8`.
pub const ANTI_STOKES_ANGLE: f64 = 3.0 * PI / 8.0;

/// An evaluation point reflected into the half plane `Re y ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPoint {
    pub x: Complex64,
    pub y_raw: Complex64,
    pub y: Complex64,
    pub theta: f64,
}

impl EvalPoint {
    /// Uses `P(x, y) = P(x, -y)`; a point with `Re y = 0` keeps its sign.
    pub fn new(x: Complex64, y: Complex64) -> Result<Self> {
        if y.re == 0.0 && y.im == 0.0 {
            return Err(PearceyError::Domain(
                "asymptotic expansion undefined at y=0; use quadrature".into(),
            ));
        }
        if !(x.re.is_finite() && x.im.is_finite() && y.re.is_finite() && y.im.is_finite()) {
            return Err(PearceyError::Domain("x and y must be finite".into()));
        }
        let flipped = if y.re < 0.0 { -y } else { y };
        // -0.0 parts would put arg on the wrong side of the cut
        let normalized = Complex64::new(flipped.re + 0.0, flipped.im + 0.0);
        Ok(Self {
            x,
            y_raw: y,
            y: normalized,
            theta: principal_log(normalized).im,
        })
    }

    pub fn region(&self) -> Region {
        classify_region(self.theta)
    }
}

/// The three sectors of `arg y ∈ [-π/2, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    /// `-π/2 ≤ θ < -π/8`: only `t₁` contributes.
    Case1,
    /// `π/8 < θ ≤ π/2`: only `t₂` contributes.
    Case2,
    /// `|θ| ≤ π/8`: both saddles contribute.
    Case3,
}

impl Region {
    pub fn label(self) -> &'static str {
        match self {
            Region::Case1 => "CASE1",
            Region::Case2 => "CASE2",
            Region::Case3 => "CASE3",
        }
    }

    pub fn saddles(self) -> &'static [Saddle] {
        match self {
            Region::Case1 => &[Saddle::T1],
            Region::Case2 => &[Saddle::T2],
            Region::Case3 => &[Saddle::T1, Saddle::T2],
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Sector of a normalized argument; the boundaries `±π/8` belong to [`Region::Case3`].
pub fn classify_region(theta: f64) -> Region {
    if theta.abs() <= SECTOR_HALF_WIDTH {
        Region::Case3
    } else if theta < 0.0 {
        Region::Case1
    } else {
        Region::Case2
    }
}

/// Natural log of the prefactor of `P_k`.
fn log_prefactor(saddle: Saddle, x: Complex64, y: Complex64) -> Complex64 {
    let s = saddle.parity();
    let log_y = principal_log(y);
    let y23 = (log_y * (2.0 / 3.0)).exp();
    let y43 = (log_y * (4.0 / 3.0)).exp();
    let exponent = y43 * cis(-s * 2.0 * PI / 3.0) * (3.0 / 4f64.powf(4.0 / 3.0))
        - x * y23 * cis(-s * PI / 3.0) / 4f64.powf(2.0 / 3.0)
        + x * x / 6.0;
    let scale = ((PI / 3.0).sqrt() / 2f64.powf(5.0 / 6.0)).ln();
    exponent + scale - log_y / 3.0
}

/// The factor multiplying the series of `P_k`. Overflows to an infinite or
/// NaN component when the real part of the exponent exceeds the `f64` range.
pub fn prefactor(saddle: Saddle, x: Complex64, y: Complex64) -> Result<Complex64> {
    if y.norm() == 0.0 {
        return Err(PearceyError::Domain("prefactor is undefined at y = 0".into()));
    }
    Ok(log_prefactor(saddle, x, y).exp())
}

fn series_terms(saddle: Saddle, table: &CoefficientTable, y: Complex64, order: usize) -> Vec<Complex64> {
    let s = saddle.parity();
    let coeffs = table.series();
    (0..=order)
        .map(|n| cis(s * (2 * n + 1) as f64 * PI / 6.0) * coeffs[n] / principal_pow(y, 2.0 * n as f64 / 3.0))
        .collect()
}

fn check_order(table: &CoefficientTable, order: usize) -> Result<()> {
    if order > table.max_order() {
        return Err(PearceyError::Capability(format!(
            "order {order} exceeds the coefficient table (max order {})",
            table.max_order()
        )));
    }
    Ok(())
}

/// `Σ_{n=0}^{order} e^{(-1)^k (2n+1) iπ/6} A_n(x) / y^{2n/3}`.
pub fn series_sum(saddle: Saddle, table: &CoefficientTable, y: Complex64, order: usize) -> Result<Complex64> {
    check_order(table, order)?;
    if y.norm() == 0.0 {
        return Err(PearceyError::Domain("series is undefined at y = 0".into()));
    }
    Ok(series_terms(saddle, table, y, order).into_iter().sum())
}

/// The truncated expansion of a single saddle contribution `P_k(x, y)`,
/// with `y` used exactly as given (no reflection).
pub fn saddle_contribution(saddle: Saddle, x: Complex64, y: Complex64, order: usize) -> Result<Complex64> {
    if order > MAX_ORDER {
        return Err(PearceyError::Capability(format!(
            "order {order} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    let table = CoefficientTable::build(x, order)?;
    Ok(prefactor(saddle, x, y)? * series_sum(saddle, &table, y, order)?)
}

/// Output of [`pearcey_asymptotic`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionResult {
    pub point: EvalPoint,
    pub value: Complex64,
    pub order: usize,
    pub region: Region,
    pub p1_contrib: Complex64,
    pub p2_contrib: Complex64,
    /// `partial_sums[n]` is the approximation truncated after `A_n`.
    pub partial_sums: Vec<Complex64>,
    /// Size of the first omitted term, a heuristic error gauge and not a bound.
    pub first_omitted_magnitude: f64,
    pub warnings: Vec<String>,
}

/// The truncated expansion of `P(x, y)` through `A_order`, combining the
/// saddle contributions according to the sector of `arg y`.
pub fn pearcey_asymptotic(x: Complex64, y: Complex64, order: usize) -> Result<ExpansionResult> {
    let point = EvalPoint::new(x, y)?;
    if order >= MAX_ORDER {
        return Err(PearceyError::Capability(format!(
            "order {order} must be below {MAX_ORDER} (one extra coefficient gauges the error)"
        )));
    }
    let region = point.region();
    let table = CoefficientTable::build(x, order + 1)?;
    let y = point.y;
    let mut warnings = Vec::new();
    if y.norm() < ACCURACY_WARNING_RADIUS {
        warnings.push(format!(
            "|y| = {:.3} is below {ACCURACY_WARNING_RADIUS}; the expansion may be inaccurate at the percent level",
            y.norm()
        ));
    }

    let mut partial_sums = vec![Complex64::new(0.0, 0.0); order + 1];
    let mut contribs = [Complex64::new(0.0, 0.0); 2];
    let mut first_omitted = 0.0;
    for &saddle in region.saddles() {
        let pre = prefactor(saddle, x, y)?;
        let terms = series_terms(saddle, &table, y, order + 1);
        let mut running = Complex64::new(0.0, 0.0);
        for (n, term) in terms[..=order].iter().enumerate() {
            running += term;
            partial_sums[n] += pre * running;
        }
        contribs[usize::from(saddle.index() - 1)] = pre * running;
        first_omitted += pre.norm() * terms[order + 1].norm();
    }
    let value = contribs[0] + contribs[1];
    if !(value.re.is_finite() && value.im.is_finite()) {
        warnings.push("exponential prefactor overflowed double precision".into());
    }

    Ok(ExpansionResult {
        point,
        value,
        order,
        region,
        p1_contrib: contribs[0],
        p2_contrib: contribs[1],
        partial_sums,
        first_omitted_magnitude: first_omitted,
        warnings,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominantTerm {
    P1,
    P2,
    Both,
}

impl DominantTerm {
    pub fn label(self) -> &'static str {
        match self {
            DominantTerm::P1 => "P1",
            DominantTerm::P2 => "P2",
            DominantTerm::Both => "BOTH",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dominance {
    pub dominant: DominantTerm,
    pub on_anti_stokes: bool,
}

/// Which saddle dominates for this `y` (after reflection into `Re y ≥ 0`).
///
/// `arg y = 0` is the Stokes line where both terms are of equal size; the
/// rays `arg y = ±3π/8` are where one term maximally dominates the other.
pub fn stokes_classification(y: Complex64) -> Result<Dominance> {
    let point = EvalPoint::new(Complex64::new(0.0, 0.0), y)?;
    let dominant = if point.y.im > 0.0 {
        DominantTerm::P2
    } else if point.y.im < 0.0 {
        DominantTerm::P1
    } else {
        DominantTerm::Both
    };
    let on_anti_stokes = (point.theta.abs() - ANTI_STOKES_ANGLE).abs() <= 1e-12;
    Ok(Dominance {
        dominant,
        on_anti_stokes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn normalize_examples() {
        let p = EvalPoint::new(c(1.0, 0.0), c(-10.0, 0.0)).unwrap();
        assert_eq!(p.y, c(10.0, 0.0));
        assert_eq!(p.theta, 0.0);
        let p = EvalPoint::new(c(1.0, 0.0), c(0.0, 10.0)).unwrap();
        assert_eq!(p.y, c(0.0, 10.0));
        assert_relative_eq!(p.theta, PI / 2.0);
        let p = EvalPoint::new(c(1.0, 0.0), c(0.0, -10.0)).unwrap();
        assert_relative_eq!(p.theta, -PI / 2.0);
        let p = EvalPoint::new(c(2.0, 0.0), c(-3.0, -4.0)).unwrap();
        assert_eq!(p.y, c(3.0, 4.0));
        assert_relative_eq!(p.theta, 4f64.atan2(3.0));
        let err = EvalPoint::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap_err();
        assert!(err.to_string().contains("use quadrature"));
    }

    #[test]
    fn region_examples() {
        assert_eq!(classify_region(0.0), Region::Case3);
        assert_eq!(classify_region(-PI / 4.0), Region::Case1);
        assert_eq!(classify_region(PI / 8.0), Region::Case3);
        assert_eq!(classify_region(-PI / 8.0), Region::Case3);
        assert_eq!(classify_region(PI / 2.0), Region::Case2);
        assert_eq!(classify_region(-PI / 2.0), Region::Case1);
    }

    #[test]
    fn prefactor_examples() {
        // dominant real part on the positive axis: -(3/2) 4^{-4/3} y^{4/3}
        let y = c(30.0, 0.0);
        let lp = log_prefactor(Saddle::T1, c(0.0, 0.0), y);
        let scale = ((PI / 3.0).sqrt() / 2f64.powf(5.0 / 6.0)).ln() - y.re.ln() / 3.0;
        assert_relative_eq!(lp.re - scale, -1.5 * 4f64.powf(-4.0 / 3.0) * 30f64.powf(4.0 / 3.0), max_relative = 1e-13);

        let one = prefactor(Saddle::T1, c(1.0, 0.0), c(12.0, 0.0)).unwrap();
        let two = prefactor(Saddle::T2, c(1.0, 0.0), c(12.0, 0.0)).unwrap();
        assert_relative_eq!(one.norm(), two.norm(), max_relative = 1e-13);

        let got = prefactor(Saddle::T2, c(0.0, 0.0), c(0.0, 1.0)).unwrap();
        let expected = cis(-PI / 6.0) * ((PI / 3.0).sqrt() * 2f64.powf(-5.0 / 6.0) * (3.0 / 4f64.powf(4.0 / 3.0)).exp());
        assert!((got - expected).norm() < 1e-14 * expected.norm());
    }

    #[test]
    fn series_examples() {
        let table = CoefficientTable::build(c(1.0, 0.0), 3).unwrap();
        let y = c(10.0, 0.0);
        for saddle in [Saddle::T1, Saddle::T2] {
            let s0 = series_sum(saddle, &table, y, 0).unwrap();
            assert!((s0 - cis(saddle.parity() * PI / 6.0)).norm() < 1e-15);
        }
        let a1 = 2f64.cbrt() * 4.0 / 27.0;
        let expected = cis(-PI / 6.0) + cis(-PI / 2.0) * a1 / 10f64.powf(2.0 / 3.0);
        let got = series_sum(Saddle::T1, &table, y, 1).unwrap();
        assert!((got - expected).norm() < 1e-14);
        let step = series_sum(Saddle::T2, &table, y, 3).unwrap() - series_sum(Saddle::T2, &table, y, 2).unwrap();
        assert_relative_eq!(step.norm(), table.series()[3].norm() / 10f64.powf(2.0), max_relative = 1e-12);
        assert!(matches!(series_sum(Saddle::T1, &table, y, 4), Err(PearceyError::Capability(_))));
    }

    #[test]
    fn contribution_examples() {
        let y = c(0.0, 20.0) * cis(-PI / 4.0);
        let one = saddle_contribution(Saddle::T1, c(1.0, 0.0), y, 5).unwrap();
        let two = saddle_contribution(Saddle::T2, c(1.0, 0.0), y, 5).unwrap();
        assert!(two.norm() > one.norm());

        let one = saddle_contribution(Saddle::T1, c(1.0, 0.0), c(15.0, 0.0), 4).unwrap();
        let two = saddle_contribution(Saddle::T2, c(1.0, 0.0), c(15.0, 0.0), 4).unwrap();
        assert!((one - two.conj()).norm() < 1e-13 * one.norm());

        let v = saddle_contribution(Saddle::T2, c(1.0, 0.0), c(0.0, 10.0), 5).unwrap();
        assert!(v.re.is_finite() && v.im.is_finite());
    }

    #[test]
    fn result_invariants() {
        let r = pearcey_asymptotic(c(1.0, 0.0), c(10.0, 0.0), 5).unwrap();
        assert_eq!(r.region, Region::Case3);
        assert_eq!(r.value, r.p1_contrib + r.p2_contrib);
        assert_eq!(r.partial_sums.len(), 6);
        assert!((r.partial_sums[5] - r.value).norm() <= 1e-15 * r.value.norm());
        assert!(r.first_omitted_magnitude > 0.0);
        assert!(r.warnings.is_empty());

        let r = pearcey_asymptotic(c(1.0, 0.0), c(3.0, 2.0), 2).unwrap();
        assert_eq!(r.region, Region::Case2);
        assert_eq!(r.p1_contrib, c(0.0, 0.0));
        assert_eq!(r.warnings.len(), 1);

        assert!(matches!(pearcey_asymptotic(c(1.0, 0.0), c(0.0, 0.0), 2), Err(PearceyError::Domain(_))));
        assert!(matches!(pearcey_asymptotic(c(1.0, 0.0), c(9.0, 0.0), MAX_ORDER), Err(PearceyError::Capability(_))));
    }

    #[test]
    fn huge_y_overflow_is_reported() {
        // on arg y = π/2 the dominant exponent is real and positive
        let r = pearcey_asymptotic(c(0.0, 0.0), c(0.0, 1e4), 1).unwrap();
        assert!(r.warnings.iter().any(|w| w.contains("overflow")));
    }

    #[test]
    fn stokes_examples() {
        let d = stokes_classification(c(0.0, 5.0)).unwrap();
        assert_eq!(d.dominant, DominantTerm::P2);
        let d = stokes_classification(c(7.0, 0.0)).unwrap();
        assert_eq!(d.dominant, DominantTerm::Both);
        assert!(!d.on_anti_stokes);
        let d = stokes_classification(cis(-3.0 * PI / 8.0) * 10.0).unwrap();
        assert_eq!(d.dominant, DominantTerm::P1);
        assert!(d.on_anti_stokes);
        // reflection: -y lies in the left half plane
        let d = stokes_classification(-(cis(3.0 * PI / 8.0) * 10.0)).unwrap();
        assert_eq!(d.dominant, DominantTerm::P2);
        assert!(d.on_anti_stokes);
    }
}
