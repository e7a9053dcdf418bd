//! Ground-truth values of `P(x, y)` by numerical quadrature, independent of
//! the asymptotic series.

pub mod contour;
pub mod kronrod;
pub mod real_axis;

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::branch::cis;
use crate::error::{PearceyError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Extended-precision integration of the defining integral on `[0, T]`.
    RealAxis,
    /// Double-precision integration along a path through the saddles.
    Contour,
}

/// Minimum working precision for real-axis values used as table ground truth.
pub const GROUND_TRUTH_DIGITS: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub strategy: Strategy,
    /// Decimal digits carried by [`Strategy::RealAxis`]; ignored by the contour.
    pub working_precision_digits: u32,
    /// Absolute tolerance. For the contour it is measured against the peak
    /// modulus of the integrand on the path.
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
}

impl QuadratureConfig {
    /// 50-digit real-axis integration.
    pub fn real_axis() -> Self {
        Self {
            strategy: Strategy::RealAxis,
            working_precision_digits: 50,
            abs_tol: 1e-40,
            rel_tol: 1e-40,
            max_subdivisions: 4000,
        }
    }

    pub fn contour() -> Self {
        Self {
            strategy: Strategy::Contour,
            working_precision_digits: 16,
            abs_tol: 1e-16,
            rel_tol: 1e-14,
            max_subdivisions: 2000,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) {
            return Err(PearceyError::Precondition(format!(
                "tolerances must be positive: abs_tol={}, rel_tol={}",
                self.abs_tol, self.rel_tol
            )));
        }
        if self.strategy == Strategy::RealAxis && self.working_precision_digits < 16 {
            return Err(PearceyError::Precondition(format!(
                "real-axis quadrature needs at least 16 working digits, got {}",
                self.working_precision_digits
            )));
        }
        Ok(())
    }

    /// Whether the configuration is precise enough to certify benchmark tables.
    pub fn is_ground_truth(&self) -> bool {
        match self.strategy {
            Strategy::RealAxis => self.working_precision_digits >= GROUND_TRUTH_DIGITS,
            Strategy::Contour => true,
        }
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self::contour()
    }
}

/// `P(x, y) = ∫₀^∞ exp(-t⁴ - x t²) cos(y t) dt` by quadrature.
pub fn pearcey_quadrature(x: Complex64, y: Complex64, cfg: &QuadratureConfig) -> Result<Complex64> {
    cfg.validate()?;
    if !(x.re.is_finite() && x.im.is_finite() && y.re.is_finite() && y.im.is_finite()) {
        return Err(PearceyError::Domain("x and y must be finite".into()));
    }
    match cfg.strategy {
        Strategy::RealAxis => real_axis::integrate(
            x,
            y,
            cfg.working_precision_digits,
            cfg.abs_tol,
            cfg.rel_tol,
            cfg.max_subdivisions,
        ),
        Strategy::Contour => contour::integrate(x, y, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions),
    }
}

/// The oscillatory form `∫_{-∞}^{∞} exp(i(t⁴ + x t² + y t)) dt`, continued
/// analytically through `2 e^{iπ/8} P(x e^{-iπ/4}, y e^{iπ/8})`.
pub fn pearcey_bar(x: Complex64, y: Complex64, cfg: &QuadratureConfig) -> Result<Complex64> {
    let value = pearcey_quadrature(x * cis(-PI / 4.0), y * cis(PI / 8.0), cfg)?;
    Ok(cis(PI / 8.0) * 2.0 * value)
}

/// `|approx - reference| / |reference|`.
pub fn relative_error(approx: Complex64, reference: Complex64) -> Result<f64> {
    let scale = reference.norm();
    if scale == 0.0 {
        return Err(PearceyError::Domain("relative error against a zero reference".into()));
    }
    Ok((approx - reference).norm() / scale)
}
