//! Coefficient families of the large-|y| expansion.
//!
//! Three families appear:
//!
//! * `a_{n,m,k}(x)`: the weights produced by expanding `exp(h)` with the
//!   binomial formula, see [`binomial_weight`];
//! * `c_n(x)`: normalized moments of the Gaussian weight
//!   `exp(-3·2^{-1/3}u² + 2^{1/3}xu)`, see [`gaussian_moment`];
//! * `A_n(x)`: the series coefficients, a finite combination of the two
//!   above, see [`series_coefficient`].
//!
//! Everything here is a pure function of its arguments. [`CoefficientTable`]
//! caches the `c_n` and `A_n` sequences for one `x`.

use num_complex::Complex64;

use crate::error::{PearceyError, Result};

/// Largest expansion order a [`CoefficientTable`] may be built for.
pub const MAX_ORDER: usize = 64;

const EXACT_FACTORIALS: [u64; 21] = [
    1,
    1,
    2,
    6,
    24,
    120,
    720,
    5_040,
    40_320,
    362_880,
    3_628_800,
    39_916_800,
    479_001_600,
    6_227_020_800,
    87_178_291_200,
    1_307_674_368_000,
    20_922_789_888_000,
    355_687_428_096_000,
    6_402_373_705_728_000,
    121_645_100_408_832_000,
    2_432_902_008_176_640_000,
];

/// `n!` as a float: exact integer table up to 20, Stirling series for ln Γ above.
pub fn factorial(n: usize) -> f64 {
    if n < EXACT_FACTORIALS.len() {
        EXACT_FACTORIALS[n] as f64
    } else {
        ln_factorial(n).exp()
    }
}

fn ln_factorial(n: usize) -> f64 {
    if n < EXACT_FACTORIALS.len() {
        return (EXACT_FACTORIALS[n] as f64).ln();
    }
    // n >= 21: the truncated Stirling tail is below 1e-17 here.
    let z = n as f64;
    let z2 = z * z;
    let tail = 1.0 / (12.0 * z) - 1.0 / (360.0 * z * z2) + 1.0 / (1260.0 * z * z2 * z2)
        - 1.0 / (1680.0 * z * z2 * z2 * z2);
    z * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI * z).ln() + tail
}

/// `x/(3·2^{1/3})`, the first-order recursion coefficient of `c_n`.
fn moment_linear_factor(x: Complex64) -> Complex64 {
    x / (3.0 * 2f64.cbrt())
}

/// `1/(3·2^{2/3})`, the step factor of the `c_n` recursion.
fn moment_step_factor() -> f64 {
    1.0 / (3.0 * 2f64.powf(2.0 / 3.0))
}

/// `a_{n,m,k}(x) = x^k 2^{4(2m-n-k)/3} (-1)^m / (k! (2m-n-k)! (n-m)!)`.
///
/// Valid for `⌊(n+1)/2⌋ ≤ m ≤ n` and `0 ≤ k ≤ 2m-n`.
pub fn binomial_weight(n: usize, m: usize, k: usize, x: Complex64) -> Result<Complex64> {
    let m_low = n.div_ceil(2);
    if m < m_low {
        return Err(PearceyError::Precondition(format!(
            "a_{{n,m,k}} requires m >= floor((n+1)/2): got m={m}, n={n}"
        )));
    }
    if m > n {
        return Err(PearceyError::Precondition(format!(
            "a_{{n,m,k}} requires m <= n: got m={m}, n={n}"
        )));
    }
    let span = 2 * m - n;
    if k > span {
        return Err(PearceyError::Precondition(format!(
            "a_{{n,m,k}} requires k <= 2m-n: got k={k}, 2m-n={span}"
        )));
    }
    Ok(binomial_weight_unchecked(n, m, k, x))
}

fn binomial_weight_unchecked(n: usize, m: usize, k: usize, x: Complex64) -> Complex64 {
    let j = 2 * m - n - k;
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let magnitude = 2f64.powf(4.0 * j as f64 / 3.0) / (factorial(k) * factorial(j) * factorial(n - m));
    x.powu(k as u32) * (sign * magnitude)
}

/// All `c_0..=c_last` by the three-term recursion.
pub fn gaussian_moments(last: usize, x: Complex64) -> Vec<Complex64> {
    let alpha = moment_linear_factor(x);
    let beta = moment_step_factor();
    let mut c = Vec::with_capacity(last + 1);
    c.push(Complex64::new(1.0, 0.0));
    if last >= 1 {
        c.push(alpha);
    }
    for n in 0..last.saturating_sub(1) {
        let next = alpha * c[n + 1] + ((n + 1) as f64 * beta) * c[n];
        c.push(next);
    }
    c
}

/// `c_n(x)` from `c_0 = 1`, `c_1 = x/(3·2^{1/3})`,
/// `c_{n+2} = x/(3·2^{1/3}) c_{n+1} + (n+1)/(3·2^{2/3}) c_n`.
///
/// The recursion is regular at `x = 0`, unlike [`gaussian_moment_closed`].
pub fn gaussian_moment(n: usize, x: Complex64) -> Complex64 {
    gaussian_moments(n, x)[n]
}

/// Closed-form sum for `c_n(x)`; singular at `x = 0`. Kept as a cross-check
/// for the recursion.
pub fn gaussian_moment_closed(n: usize, x: Complex64) -> Result<Complex64> {
    if x == Complex64::new(0.0, 0.0) {
        return Err(PearceyError::Domain(
            "closed-form c_n divides by x^2; use gaussian_moment at x = 0".into(),
        ));
    }
    let ratio = 3.0 / (2.0 * x * x);
    let n_fact = factorial(n);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut ratio_pow = Complex64::new(1.0, 0.0);
    for k in 0..=n / 2 {
        sum += ratio_pow * (n_fact / (factorial(k) * factorial(n - 2 * k)));
        ratio_pow *= ratio;
    }
    let lead = x.powu(n as u32) / (3f64.powi(n as i32) * 2f64.powf(n as f64 / 3.0));
    Ok(lead * sum)
}

fn series_coefficient_from(n: usize, x: Complex64, moments: &[Complex64]) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for m in n.div_ceil(2)..=n {
        for k in 0..=(2 * m - n) {
            let sign = if (n + k).is_multiple_of(2) { 1.0 } else { -1.0 };
            total += binomial_weight_unchecked(n, m, k, x) * moments[2 * m + n - k] * sign;
        }
    }
    total
}

/// `A_n(x) = Σ_{m=⌊(n+1)/2⌋}^{n} Σ_{k=0}^{2m-n} (-1)^{n+k} a_{n,m,k}(x) c_{2m+n-k}(x)`.
pub fn series_coefficient(n: usize, x: Complex64) -> Complex64 {
    let moments = gaussian_moments(3 * n, x);
    series_coefficient_from(n, x, &moments)
}

/// Cached `c_n(x)` (to index `3·max_order`) and `A_n(x)` (to `max_order`) for one `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    x: Complex64,
    max_order: usize,
    moments: Vec<Complex64>,
    series: Vec<Complex64>,
}

impl CoefficientTable {
    pub fn build(x: Complex64, max_order: usize) -> Result<Self> {
        if max_order > MAX_ORDER {
            return Err(PearceyError::Capability(format!(
                "coefficient order {max_order} exceeds the supported maximum {MAX_ORDER}"
            )));
        }
        let moments = gaussian_moments(3 * max_order, x);
        let series = (0..=max_order)
            .map(|n| series_coefficient_from(n, x, &moments))
            .collect();
        Ok(Self {
            x,
            max_order,
            moments,
            series,
        })
    }

    pub fn x(&self) -> Complex64 {
        self.x
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// `c_0..=c_{3·max_order}`.
    pub fn moments(&self) -> &[Complex64] {
        &self.moments
    }

    /// `A_0..=A_{max_order}`.
    pub fn series(&self) -> &[Complex64] {
        &self.series
    }
}
