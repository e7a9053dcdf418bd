//! Saddle-point geometry of the rotated integral.
//!
//! After scaling `u = t·y^{1/3}` the integrand becomes
//! `exp(|y|^{4/3} f(t) - x y^{2/3} t²)` with phase
//! `f(t; θ) = e^{4iθ/3}(it - t⁴)`, `θ = arg y`. Only the saddles `t₁`, `t₂`
//! contribute. Paths are described by landmark points (saddles, the
//! intersections `W`, `U` with the original ray, and the finite truncation
//! limits in the local variable `u`); no contour is traced here.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::branch::{cis, principal_pow};
use crate::coefficients::binomial_weight;
use crate::error::{PearceyError, Result};

/// Upper bound on `Re f` at `W` and `U` over `|θ| ≤ π/8`; the discarded
/// tails are `O(exp(-1.38077·|y|^{4/3}))`.
pub const NEGLIGIBLE_DECAY_RATE: f64 = -1.38077;

/// Sector half-width `π/8` that separates the one-saddle and two-saddle cases.
pub const SECTOR_HALF_WIDTH: f64 = PI / 8.0;

/// One of the two contributing saddles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Saddle {
    T1,
    T2,
}

impl Saddle {
    pub fn index(self) -> u8 {
        match self {
            Saddle::T1 => 1,
            Saddle::T2 => 2,
        }
    }

    /// `(-1)^k` for saddle `k`.
    pub fn parity(self) -> f64 {
        match self {
            Saddle::T1 => -1.0,
            Saddle::T2 => 1.0,
        }
    }
}

impl TryFrom<u8> for Saddle {
    type Error = PearceyError;

    fn try_from(k: u8) -> Result<Self> {
        match k {
            1 => Ok(Saddle::T1),
            2 => Ok(Saddle::T2),
            _ => Err(PearceyError::Domain(format!("saddle index must be 1 or 2, got {k}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SaddleSet {
    pub t0: Complex64,
    pub t1: Complex64,
    pub t2: Complex64,
}

impl SaddleSet {
    pub fn get(&self, saddle: Saddle) -> Complex64 {
        match saddle {
            Saddle::T1 => self.t1,
            Saddle::T2 => self.t2,
        }
    }
}

fn saddle_radius() -> f64 {
    4f64.powf(-1.0 / 3.0)
}

/// The three zeros of `f'`: `t₀ = -i 4^{-1/3}`, `t₁ = e^{iπ/6} 4^{-1/3}`,
/// `t₂ = e^{5iπ/6} 4^{-1/3}`. They do not depend on `θ`.
pub fn saddle_points() -> SaddleSet {
    let r = saddle_radius();
    SaddleSet {
        t0: Complex64::new(0.0, -r),
        t1: cis(PI / 6.0) * r,
        t2: cis(5.0 * PI / 6.0) * r,
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if theta.abs() > PI / 2.0 + 1e-15 || !theta.is_finite() {
        return Err(PearceyError::Domain(format!(
            "theta = {theta} lies outside [-pi/2, pi/2]"
        )));
    }
    Ok(())
}

/// `f(t; θ) = e^{4iθ/3}(it - t⁴)`.
pub fn phase(t: Complex64, theta: f64) -> Result<Complex64> {
    check_theta(theta)?;
    Ok(cis(4.0 * theta / 3.0) * (Complex64::i() * t - t.powu(4)))
}

/// `f'(t; θ) = e^{4iθ/3}(i - 4t³)`.
pub fn phase_derivative(t: Complex64, theta: f64) -> Result<Complex64> {
    check_theta(theta)?;
    Ok(cis(4.0 * theta / 3.0) * (Complex64::i() - 4.0 * t.powu(3)))
}

/// The phase rewritten as its quartic Taylor polynomial about `t₁` or `t₂`.
pub fn taylor_phase(t: Complex64, theta: f64, saddle: Saddle) -> Result<Complex64> {
    check_theta(theta)?;
    let s = saddle.parity();
    let center = saddle_points().get(saddle);
    let d = t - center;
    let rot = 4.0 * theta / 3.0;
    // s = -1 for t₁, +1 for t₂
    let constant = cis(rot - s * 2.0 * PI / 3.0) * (3.0 / 4f64.powf(4.0 / 3.0));
    let quadratic = cis(rot - s * PI / 3.0) * (3.0 / 2f64.cbrt());
    let cubic = cis(rot - s * PI / 6.0) * 2f64.powf(4.0 / 3.0);
    let quartic = cis(rot);
    Ok(constant - quadratic * d * d + cubic * s * d.powu(3) - quartic * d.powu(4))
}

/// The remainder `h_k(u, x, y)` left in the exponent after the local change
/// of variable `t = t_k + u y^{-2/3} e^{∓iπ/6}`.
pub fn local_remainder(u: Complex64, x: Complex64, y: Complex64, saddle: Saddle) -> Result<Complex64> {
    if y.norm() == 0.0 {
        return Err(PearceyError::Domain("h_k is undefined at y = 0".into()));
    }
    let s = saddle.parity();
    let y23 = principal_pow(y, 2.0 / 3.0);
    let y43 = principal_pow(y, 4.0 / 3.0);
    let c43 = 2f64.powf(4.0 / 3.0);
    let u2 = u * u;
    Ok(cis(-s * 2.0 * PI / 3.0) * u2 * (x - s * c43 * u) / y23 + cis(-s * PI / 3.0) * u2 * u2 / y43)
}

/// Which of the two local expansions of `exp(h_k)` is requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalSeries {
    /// `Ā_n(x, u)`, the coefficients of `exp(h₁)`.
    A,
    /// `B̄_n(x, u)`, the coefficients of `exp(h₂)`.
    B,
}

/// Coefficient of `y^{-2n/3}` in `exp(h_k(u, x, y))`.
pub fn local_series_coefficient(n: usize, x: Complex64, u: Complex64, which: LocalSeries) -> Complex64 {
    let (rotation, base) = match which {
        LocalSeries::A => (cis(-(n as f64) * PI / 3.0), u),
        LocalSeries::B => (cis(n as f64 * PI / 3.0), -u),
    };
    let mut total = Complex64::new(0.0, 0.0);
    for m in n.div_ceil(2)..=n {
        for k in 0..=(2 * m - n) {
            let w = binomial_weight(n, m, k, x).expect("index set is valid by construction");
            total += w * base.powu((2 * m + n - k) as u32);
        }
    }
    rotation * total
}

/// Landmarks of the two-saddle path for `|θ| ≤ π/8`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CasePathLimits {
    pub theta: f64,
    /// `(u₋, u₊)` for the `t₁` segment.
    pub first: (f64, f64),
    /// `(u₋, u₊)` for the `t₂` segment.
    pub second: (f64, f64),
    /// Where the `t₁` line meets the original ray.
    pub w: Complex64,
    /// Where the `t₂` line meets the original ray.
    pub u: Complex64,
}

fn check_two_saddle_sector(theta: f64) -> Result<()> {
    if !(theta.abs() <= SECTOR_HALF_WIDTH) {
        return Err(PearceyError::Domain(format!(
            "theta = {theta} is outside the two-saddle sector |theta| <= pi/8"
        )));
    }
    Ok(())
}

fn landmarks(theta: f64) -> (Complex64, Complex64) {
    let saddles = saddle_points();
    let reach = 2f64.powf(-2.0 / 3.0);
    let w = saddles.t1 + cis(-(PI + 4.0 * theta) / 6.0) * reach;
    let u = saddles.t2 - cis((PI - 4.0 * theta) / 6.0) * reach;
    (w, u)
}

pub fn case_path_limits(theta: f64, y_mod: f64) -> Result<CasePathLimits> {
    check_two_saddle_sector(theta)?;
    if !(y_mod > 0.0) {
        return Err(PearceyError::Domain(format!("|y| must be positive, got {y_mod}")));
    }
    let near = (y_mod / 2.0).powf(2.0 / 3.0);
    let far = (2.0 * y_mod * y_mod).cbrt();
    let (w, u) = landmarks(theta);
    Ok(CasePathLimits {
        theta,
        first: (-far * ((PI + 2.0 * theta) / 3.0).cos(), near),
        second: (-near, far * ((PI - 2.0 * theta) / 3.0).cos()),
        w,
        u,
    })
}

/// `max(Re f(W; θ), Re f(U; θ))` for `|θ| ≤ π/8`.
pub fn negligible_decay_rate(theta: f64) -> Result<f64> {
    check_two_saddle_sector(theta)?;
    let (w, u) = landmarks(theta);
    Ok(phase(w, theta)?.re.max(phase(u, theta)?.re))
}

/// `exp(|y|^{4/3} · negligible_decay_rate(θ))`, the size of the discarded tails
/// relative to an `O(1)` integrand.
pub fn negligible_tail_bound(theta: f64, y_mod: f64) -> Result<f64> {
    let rate = negligible_decay_rate(theta)?;
    Ok((y_mod.powf(4.0 / 3.0) * rate).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn saddle_constants() {
        let s = saddle_points();
        assert!((s.t0 - c(0.0, -0.629_960_524_947_436_6)).norm() < 1e-15);
        assert!((s.t1 - c(0.545_561_817_985_861_3, 0.314_980_262_473_718_3)).norm() < 1e-15);
        assert!((s.t2 - c(-0.545_561_817_985_861_3, 0.314_980_262_473_718_3)).norm() < 1e-15);
        assert!(phase_derivative(s.t2, 0.3).unwrap().norm() <= 1e-13);
    }

    #[test]
    fn phase_examples() {
        assert_eq!(phase(c(0.0, 0.0), 0.7).unwrap(), c(0.0, 0.0));
        assert!((phase(c(0.0, 1.0), 0.0).unwrap() - c(-2.0, 0.0)).norm() < 1e-15);
        let t1 = saddle_points().t1;
        let expected = cis(2.0 * PI / 3.0) * (3.0 / 4f64.powf(4.0 / 3.0));
        assert!((phase(t1, 0.0).unwrap() - expected).norm() < 1e-15);
        assert!(phase(t1, 2.0).is_err());
    }

    #[test]
    fn taylor_constant_terms() {
        let s = saddle_points();
        for theta in [-1.2, 0.0, 0.4] {
            let k = 3.0 / 4f64.powf(4.0 / 3.0);
            let one = taylor_phase(s.t1, theta, Saddle::T1).unwrap();
            assert!((one - cis((4.0 * theta + 2.0 * PI) / 3.0) * k).norm() < 1e-15);
            let two = taylor_phase(s.t2, theta, Saddle::T2).unwrap();
            assert!((two - cis((4.0 * theta - 2.0 * PI) / 3.0) * k).norm() < 1e-15);
        }
    }

    #[test]
    fn saddle_index_validation() {
        assert_eq!(Saddle::try_from(2).unwrap(), Saddle::T2);
        assert!(matches!(Saddle::try_from(3), Err(PearceyError::Domain(_))));
    }

    #[test]
    fn remainder_examples() {
        let y = c(3.0, 1.0);
        assert_eq!(local_remainder(c(0.0, 0.0), c(1.0, 0.0), y, Saddle::T1).unwrap(), c(0.0, 0.0));
        let h = local_remainder(c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), Saddle::T1).unwrap();
        let expected = cis(2.0 * PI / 3.0) * 2f64.powf(4.0 / 3.0) + cis(PI / 3.0);
        assert!((h - expected).norm() < 1e-14);
        assert!(local_remainder(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), Saddle::T2).is_err());
    }

    #[test]
    fn second_remainder_is_mirror_of_first_for_real_data() {
        // h₂(u) = conj(h₁(-u)) when x, y, u are real
        for (u, x, y) in [(0.3, 1.0, 20.0), (-0.7, -2.0, 5.0), (1.1, 0.5, 40.0)] {
            let h1 = local_remainder(c(-u, 0.0), c(x, 0.0), c(y, 0.0), Saddle::T1).unwrap();
            let h2 = local_remainder(c(u, 0.0), c(x, 0.0), c(y, 0.0), Saddle::T2).unwrap();
            assert!((h2 - h1.conj()).norm() < 1e-14 * (1.0 + h1.norm()));
        }
    }

    #[test]
    fn local_series_examples() {
        assert_eq!(local_series_coefficient(0, c(2.0, 1.0), c(0.4, 0.0), LocalSeries::A), c(1.0, 0.0));
        let a1 = local_series_coefficient(1, c(0.0, 0.0), c(1.0, 0.0), LocalSeries::A);
        let expected = cis(-PI / 3.0) * -2f64.powf(4.0 / 3.0);
        assert!((a1 - expected).norm() < 1e-14);
    }

    #[test]
    fn local_series_reproduces_exponential() {
        let (u, x, y) = (c(0.3, 0.0), c(1.0, 0.0), c(30.0, 0.0));
        let exact = local_remainder(u, x, y, Saddle::T1).unwrap().exp();
        let sum: Complex64 = (0..=6)
            .map(|n| local_series_coefficient(n, x, u, LocalSeries::A) / principal_pow(y, 2.0 * n as f64 / 3.0))
            .sum();
        assert!((exact - sum).norm() < 1e-6);
        let exact = local_remainder(u, x, y, Saddle::T2).unwrap().exp();
        let sum: Complex64 = (0..=6)
            .map(|n| local_series_coefficient(n, x, u, LocalSeries::B) / principal_pow(y, 2.0 * n as f64 / 3.0))
            .sum();
        assert!((exact - sum).norm() < 1e-6);
    }

    #[test]
    fn decay_rate_extremes() {
        let plus = negligible_decay_rate(PI / 8.0).unwrap();
        let minus = negligible_decay_rate(-PI / 8.0).unwrap();
        assert_relative_eq!(plus, NEGLIGIBLE_DECAY_RATE, max_relative = 1e-5);
        assert_relative_eq!(minus, NEGLIGIBLE_DECAY_RATE, max_relative = 1e-5);
        assert!(negligible_decay_rate(0.0).unwrap() <= NEGLIGIBLE_DECAY_RATE);
        assert!(negligible_decay_rate(0.5).is_err());
    }

    #[test]
    fn path_limits_land_on_landmarks() {
        let s = saddle_points();
        for theta in [-PI / 8.0, -0.2, 0.0, 0.1, PI / 8.0] {
            let y_mod = 20.0;
            let lim = case_path_limits(theta, y_mod).unwrap();
            // t = t₁ + u |y|^{-2/3} e^{-i(π+4θ)/6}
            let scale = y_mod.powf(-2.0 / 3.0);
            let w = s.t1 + cis(-(PI + 4.0 * theta) / 6.0) * (lim.first.1 * scale);
            assert!((w - lim.w).norm() < 1e-14);
            let u = s.t2 + cis((PI - 4.0 * theta) / 6.0) * (lim.second.0 * scale);
            assert!((u - lim.u).norm() < 1e-14);
            // both finite segments end at the same point
            let a = s.t1 + cis(-(PI + 4.0 * theta) / 6.0) * (lim.first.0 * scale);
            let b = s.t2 + cis((PI - 4.0 * theta) / 6.0) * (lim.second.1 * scale);
            assert!((a - b).norm() < 1e-14, "theta={theta}: {a} vs {b}");
            // W and U lie on the ray arg t = -θ/3
            assert!(((lim.w * cis(theta / 3.0)).im).abs() < 1e-14);
            assert!(((lim.u * cis(theta / 3.0)).im).abs() < 1e-14);
        }
    }
}
