//! Extended-precision quadrature of `∫₀^T exp(-t⁴ - x t²) cos(y t) dt`
//! directly on the real axis.
//!
//! For real `y` of modest size the result is exponentially small while the
//! integrand is `O(1)`, so most of the leading digits cancel. All arithmetic
//! therefore runs at a caller-chosen decimal precision using `astro-float`;
//! only the final sum is rounded to `f64`.
//!
//! `[0, T]` is cut into uniform panels narrow enough to resolve the
//! oscillation of `cos(y t)`. Each panel is integrated with 16- and 24-point
//! Gauss–Legendre rules; panels where the two disagree beyond the tolerance
//! are bisected.

use astro_float::{BigFloat, Consts, RoundingMode};
use num_complex::Complex64;

use crate::error::{PearceyError, Result};

const RM: RoundingMode = RoundingMode::ToEven;
const LOW_ORDER: usize = 16;
const HIGH_ORDER: usize = 24;

/// Upper integration limit: the root of `-T⁴ + |x|T² + |Im y|T = ln(abs_tol) - 5`.
pub fn truncation_point(x: Complex64, y: Complex64, abs_tol: f64) -> f64 {
    let target = abs_tol.ln() - 5.0;
    let envelope = |t: f64| -t.powi(4) + x.norm() * t * t + y.im.abs() * t;
    let mut hi = 1.0;
    while envelope(hi) > target {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if envelope(mid) > target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    hi
}

/// Widest panel allowed: a quarter of `π/(1 + |y|)`, capped at 0.25.
pub fn max_panel_width(y: Complex64) -> f64 {
    (std::f64::consts::PI / (4.0 * (1.0 + y.norm()))).min(0.25)
}

/// Binary precision for `digits` decimal digits plus guard bits.
pub fn precision_bits(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 32
}

fn big(v: f64, p: usize) -> BigFloat {
    BigFloat::from_f64(v, p)
}

/// Rounds to the nearest `f64` through the decimal representation.
fn to_f64(v: &BigFloat) -> f64 {
    if v.is_zero() {
        return 0.0;
    }
    format!("{v}").parse().unwrap_or(f64::NAN)
}

/// `log₂` upper bound of `|v|`; `-∞` for zero.
fn log2_bound(v: &BigFloat) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    v.exponent().map_or(f64::INFINITY, |e| e as f64)
}

/// Gauss–Legendre abscissae and weights on `[-1, 1]` at precision `p`.
struct Rule {
    nodes: Vec<BigFloat>,
    weights: Vec<BigFloat>,
    weights_f64: Vec<f64>,
    nodes_f64: Vec<f64>,
}

/// `(P_n(x), P_{n-1}(x))` by the three-term recurrence.
fn legendre_pair(n: usize, x: &BigFloat, p: usize) -> (BigFloat, BigFloat) {
    let mut prev = big(1.0, p);
    let mut cur = x.clone();
    for k in 1..n {
        let kf = k as f64;
        let next = big(2.0 * kf + 1.0, p)
            .mul(x, p, RM)
            .mul(&cur, p, RM)
            .sub(&big(kf, p).mul(&prev, p, RM), p, RM)
            .div(&big(kf + 1.0, p), p, RM);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// `(P_n(x), P_n'(x))`.
fn legendre_with_derivative(n: usize, x: &BigFloat, p: usize) -> (BigFloat, BigFloat) {
    let (pn, pm) = legendre_pair(n, x, p);
    let x2m1 = x.mul(x, p, RM).sub(&big(1.0, p), p, RM);
    let dpn = big(n as f64, p)
        .mul(&x.mul(&pn, p, RM).sub(&pm, p, RM), p, RM)
        .div(&x2m1, p, RM);
    (pn, dpn)
}

impl Rule {
    fn new(n: usize, p: usize) -> Self {
        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let one = big(1.0, p);
        for i in 0..n {
            let mut guess = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            // f64 Newton first, then enough extended steps to double past p bits
            for _ in 0..8 {
                let (pn, pm) = legendre_f64(n, guess);
                let dp = n as f64 * (guess * pn - pm) / (guess * guess - 1.0);
                guess -= pn / dp;
            }
            let mut x = big(guess, p);
            for _ in 0..6 {
                let (pn, dpn) = legendre_with_derivative(n, &x, p);
                let step = pn.div(&dpn, p, RM);
                x = x.sub(&step, p, RM);
                if log2_bound(&step) < -(p as f64) {
                    break;
                }
            }
            let (_, dpn) = legendre_with_derivative(n, &x, p);
            let w = big(2.0, p).div(
                &one.sub(&x.mul(&x, p, RM), p, RM).mul(&dpn, p, RM).mul(&dpn, p, RM),
                p,
                RM,
            );
            nodes.push(x);
            weights.push(w);
        }
        let weights_f64 = weights.iter().map(to_f64).collect();
        let nodes_f64 = nodes.iter().map(to_f64).collect();
        Self {
            nodes,
            weights,
            weights_f64,
            nodes_f64,
        }
    }
}

fn legendre_f64(n: usize, x: f64) -> (f64, f64) {
    let (mut prev, mut cur) = (1.0, x);
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

struct Integrand {
    p: usize,
    consts: Consts,
    x_re: BigFloat,
    x_im: BigFloat,
    y_re: BigFloat,
    y_im: BigFloat,
    x_f64: Complex64,
    y_f64: Complex64,
    real_phase_free: bool,
    no_growth: bool,
}

struct HpComplex {
    re: BigFloat,
    im: BigFloat,
}

impl Integrand {
    fn new(x: Complex64, y: Complex64, p: usize) -> Result<Self> {
        let consts = Consts::new().map_err(|e| PearceyError::Capability(format!("extended precision setup failed: {e:?}")))?;
        Ok(Self {
            p,
            consts,
            x_re: big(x.re, p),
            x_im: big(x.im, p),
            y_re: big(y.re, p),
            y_im: big(y.im, p),
            x_f64: x,
            y_f64: y,
            real_phase_free: x.im == 0.0,
            no_growth: y.im == 0.0,
        })
    }

    /// `exp(-t⁴ - x t²) cos(y t)` written as
    /// `½ Σ_{s=±1} exp(-t⁴ - Re x t² - s Im y t) e^{i(-Im x t² + s Re y t)}`.
    fn eval(&mut self, t: &BigFloat) -> HpComplex {
        let p = self.p;
        let cc = &mut self.consts;
        let t2 = t.mul(t, p, RM);
        let t4 = t2.mul(&t2, p, RM);
        let base = t4.add(&self.x_re.mul(&t2, p, RM), p, RM).neg();
        let at = self.y_re.mul(t, p, RM);

        if self.no_growth && self.real_phase_free {
            let e = base.exp(p, RM, cc);
            return HpComplex {
                re: e.mul(&at.cos(p, RM, cc), p, RM),
                im: big(0.0, p),
            };
        }

        let (e_plus, e_minus) = if self.no_growth {
            let e = base.exp(p, RM, cc);
            (e.clone(), e)
        } else {
            let bt = self.y_im.mul(t, p, RM);
            (base.sub(&bt, p, RM).exp(p, RM, cc), base.add(&bt, p, RM).exp(p, RM, cc))
        };
        let (cos_plus, sin_plus, cos_minus, sin_minus) = if self.real_phase_free {
            let c = at.cos(p, RM, cc);
            let s = at.sin(p, RM, cc);
            let ms = s.neg();
            (c.clone(), s, c, ms)
        } else {
            let quad = self.x_im.mul(&t2, p, RM).neg();
            let plus = quad.add(&at, p, RM);
            let minus = quad.sub(&at, p, RM);
            (
                plus.cos(p, RM, cc),
                plus.sin(p, RM, cc),
                minus.cos(p, RM, cc),
                minus.sin(p, RM, cc),
            )
        };
        let half = big(0.5, p);
        let re = e_plus
            .mul(&cos_plus, p, RM)
            .add(&e_minus.mul(&cos_minus, p, RM), p, RM)
            .mul(&half, p, RM);
        let im = e_plus
            .mul(&sin_plus, p, RM)
            .add(&e_minus.mul(&sin_minus, p, RM), p, RM)
            .mul(&half, p, RM);
        HpComplex { re, im }
    }

    /// Double-precision bound on `|integrand(t)|`.
    fn envelope(&self, t: f64) -> f64 {
        let base = -t.powi(4) - self.x_f64.re * t * t;
        (base + self.y_f64.im.abs() * t).exp()
    }
}

struct PanelEstimate {
    high: HpComplex,
    error_log2: f64,
    abs_value: f64,
}

fn apply_rule(f: &mut Integrand, rule: &Rule, center: &BigFloat, half: &BigFloat) -> HpComplex {
    let p = f.p;
    let mut re = big(0.0, p);
    let mut im = big(0.0, p);
    for (node, weight) in rule.nodes.iter().zip(&rule.weights) {
        let t = center.add(&half.mul(node, p, RM), p, RM);
        let v = f.eval(&t);
        re = re.add(&v.re.mul(weight, p, RM), p, RM);
        im = im.add(&v.im.mul(weight, p, RM), p, RM);
    }
    HpComplex {
        re: re.mul(half, p, RM),
        im: im.mul(half, p, RM),
    }
}

fn panel(f: &mut Integrand, low: &Rule, high: &Rule, a: f64, b: f64) -> PanelEstimate {
    let p = f.p;
    let center = big(a, p).add(&big(b, p), p, RM).mul(&big(0.5, p), p, RM);
    let half = big(b, p).sub(&big(a, p), p, RM).mul(&big(0.5, p), p, RM);
    let lo = apply_rule(f, low, &center, &half);
    let hi = apply_rule(f, high, &center, &half);
    let d_re = hi.re.sub(&lo.re, p, RM);
    let d_im = hi.im.sub(&lo.im, p, RM);
    let error_log2 = log2_bound(&d_re).max(log2_bound(&d_im)) + 1.0;
    let (c, h) = (0.5 * (a + b), 0.5 * (b - a));
    let abs_value = h * high
        .nodes_f64
        .iter()
        .zip(&high.weights_f64)
        .map(|(xi, w)| w * f.envelope(c + h * xi))
        .sum::<f64>();
    PanelEstimate {
        high: hi,
        error_log2,
        abs_value,
    }
}

/// Integrates `exp(-t⁴ - x t²) cos(y t)` over `[0, ∞)` at `digits` decimal digits.
pub fn integrate(
    x: Complex64,
    y: Complex64,
    digits: u32,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<Complex64> {
    let p = precision_bits(digits);
    let mut f = Integrand::new(x, y, p)?;
    let low = Rule::new(LOW_ORDER, p);
    let high = Rule::new(HIGH_ORDER, p);

    let t_max = truncation_point(x, y, abs_tol);
    let panels = (t_max / max_panel_width(y)).ceil().max(1.0) as usize;
    let width = t_max / panels as f64;
    let rounding_floor = 2f64.powi(-(p as i32) + 16);

    let mut stack: Vec<(f64, f64)> = (0..panels)
        .rev()
        .map(|j| (j as f64 * width, if j + 1 == panels { t_max } else { (j + 1) as f64 * width }))
        .collect();
    let mut total_re = big(0.0, p);
    let mut total_im = big(0.0, p);
    let mut subdivisions = 0;
    let mut worst_excess = 0.0f64;
    while let Some((a, b)) = stack.pop() {
        let est = panel(&mut f, &low, &high, a, b);
        let share = (b - a) / t_max;
        let tol = (abs_tol * share).max(rel_tol * est.abs_value).max(rounding_floor * est.abs_value);
        if est.error_log2 > tol.log2() {
            if subdivisions < max_subdivisions {
                subdivisions += 1;
                let mid = 0.5 * (a + b);
                stack.push((mid, b));
                stack.push((a, mid));
                continue;
            }
            worst_excess = worst_excess.max(2f64.powf(est.error_log2));
        }
        total_re = total_re.add(&est.high.re, p, RM);
        total_im = total_im.add(&est.high.im, p, RM);
    }
    let value = Complex64::new(to_f64(&total_re), to_f64(&total_im));
    if worst_excess > 0.0 {
        return Err(PearceyError::Convergence {
            estimate_re: value.re,
            estimate_im: value.im,
            achieved_error: worst_excess,
        });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rule_is_exact_for_polynomials() {
        let p = precision_bits(50);
        let rule = Rule::new(LOW_ORDER, p);
        let total: f64 = rule.weights_f64.iter().sum();
        assert!((total - 2.0).abs() < 1e-15);
        // ∫ x^30 = 2/31 is exact for n = 16 (degree ≤ 31)
        let mut acc = big(0.0, p);
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            acc = acc.add(&x.powi(30, p, RM).mul(w, p, RM), p, RM);
        }
        let err = acc.sub(&big(2.0, p).div(&big(31.0, p), p, RM), p, RM);
        assert!(log2_bound(&err) < -160.0);
    }

    #[test]
    fn truncation_respects_envelope() {
        let x = Complex64::new(1.0, 0.0);
        let y = Complex64::new(3.0, -7.0);
        let t = truncation_point(x, y, 1e-40);
        let env = -t.powi(4) + t * t + 7.0 * t;
        assert!((env - (1e-40f64.ln() - 5.0)).abs() < 1e-6);
    }

    #[test]
    fn panel_width_bound() {
        assert_eq!(max_panel_width(Complex64::new(0.0, 0.0)), 0.25);
        let w = max_panel_width(Complex64::new(50.0, 0.0));
        assert!((w - std::f64::consts::PI / 204.0).abs() < 1e-15);
    }
}
