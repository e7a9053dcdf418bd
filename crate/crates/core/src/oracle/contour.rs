//! Double-precision quadrature along a saddle-point contour.
//!
//! `P(x, y) = ½ ∫_{-∞}^{∞} exp(-u⁴ - x u² + i y u) du`. The integrand is
//! entire and decays in the sectors `|arg u| < π/8` and `|arg u - π| < π/8`,
//! so the real line may be replaced by any path that leaves horizontally in
//! both directions. The path used here runs in from `-∞` horizontally, visits
//! the contributing scaled saddles `u_k = t_k y^{1/3}` (both of them for
//! `|arg y| ≤ π/8`, otherwise only the dominant one), and leaves horizontally
//! to `+∞`. Along it the modulus peaks at the saddles, so there is no
//! catastrophic cancellation and double precision is enough.

use num_complex::Complex64;

use crate::asymptotics::{classify_region, Region};
use crate::branch::{principal_log, principal_pow};
use crate::error::{PearceyError, Result};
use crate::geometry::{saddle_points, Saddle};

use super::kronrod;

/// `ln(ε)` below which a tail of the shifted integrand is dropped.
const TAIL_CUTOFF: f64 = -60.0;

fn exponent(x: Complex64, y: Complex64, u: Complex64) -> Complex64 {
    let u2 = u * u;
    -u2 * u2 - x * u2 + Complex64::i() * y * u
}

/// `±y` with `Re ≥ 0` and no negative zeros; `P` is even in `y`.
fn reflect(y: Complex64) -> Complex64 {
    let y = if y.re < 0.0 { -y } else { y };
    Complex64::new(y.re + 0.0, y.im + 0.0)
}

/// Path vertices in the `u` plane for the reflected `y`, ordered left to right.
pub fn path_vertices(y: Complex64) -> Vec<Complex64> {
    if y.norm() == 0.0 {
        return vec![Complex64::new(0.0, 0.0)];
    }
    let y = reflect(y);
    let scale = principal_pow(y, 1.0 / 3.0);
    let saddles = saddle_points();
    let region = classify_region(principal_log(y).im);
    let pick = |s: Saddle| saddles.get(s) * scale;
    match region {
        Region::Case3 => vec![pick(Saddle::T2), pick(Saddle::T1)],
        Region::Case1 => vec![pick(Saddle::T1)],
        Region::Case2 => vec![pick(Saddle::T2)],
    }
}

enum Piece {
    Segment { from: Complex64, to: Complex64 },
    Ray { from: Complex64, direction: f64 },
}

/// Parameter length after which a horizontal ray's shifted integrand is
/// below `exp(TAIL_CUTOFF)` for good.
fn ray_length(x: Complex64, y: Complex64, from: Complex64, direction: f64, shift: f64) -> f64 {
    // past this radius -u⁴ outweighs the other two terms and the modulus decreases
    let quartic_radius = 2.0 * (1.0 + x.norm().sqrt() + y.norm().cbrt());
    let mut length = 1.0;
    loop {
        let u = from + Complex64::new(direction * length, 0.0);
        let re = exponent(x, y, u).re - shift;
        if re < TAIL_CUTOFF && u.norm() > quartic_radius {
            return length;
        }
        length *= 1.5;
        if length > 1e6 {
            return length;
        }
    }
}

/// Largest real part of the exponent over a sampling of the path.
fn peak_exponent(x: Complex64, y: Complex64, vertices: &[Complex64]) -> f64 {
    let mut peak = f64::NEG_INFINITY;
    let mut probe = |u: Complex64| peak = peak.max(exponent(x, y, u).re);
    for w in vertices.windows(2) {
        for j in 0..=64 {
            probe(w[0] + (w[1] - w[0]) * (j as f64 / 64.0));
        }
    }
    let first = vertices[0];
    let last = vertices[vertices.len() - 1];
    for j in 0..=64 {
        let step = j as f64 / 16.0;
        probe(first - step);
        probe(last + step);
    }
    peak
}

/// Evaluates `P(x, y)` along the saddle contour.
pub fn integrate(x: Complex64, y: Complex64, abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Complex64> {
    let y = reflect(y);
    let vertices = path_vertices(y);
    let shift = peak_exponent(x, y, &vertices);
    let mut pieces = Vec::with_capacity(vertices.len() + 1);
    pieces.push(Piece::Ray {
        from: vertices[0],
        direction: -1.0,
    });
    for w in vertices.windows(2) {
        pieces.push(Piece::Segment { from: w[0], to: w[1] });
    }
    pieces.push(Piece::Ray {
        from: vertices[vertices.len() - 1],
        direction: 1.0,
    });

    let mut total = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    let mut converged = true;
    for piece in &pieces {
        let result = match *piece {
            Piece::Segment { from, to } => {
                let d = to - from;
                kronrod::integrate(
                    |s| (exponent(x, y, from + d * s) - shift).exp() * d,
                    0.0,
                    1.0,
                    abs_tol,
                    rel_tol,
                    max_subdivisions,
                )
            }
            Piece::Ray { from, direction } => {
                // parametrized by the real offset from the vertex, so du = ds
                let length = ray_length(x, y, from, direction, shift);
                let (lo, hi) = if direction < 0.0 { (-length, 0.0) } else { (0.0, length) };
                kronrod::integrate(
                    |s| (exponent(x, y, from + Complex64::new(s, 0.0)) - shift).exp(),
                    lo,
                    hi,
                    abs_tol,
                    rel_tol,
                    max_subdivisions,
                )
            }
        };
        total += result.value;
        error += result.error;
        converged &= result.converged;
    }

    let scale = 0.5 * shift.exp();
    let value = total * scale;
    if !converged {
        return Err(PearceyError::Convergence {
            estimate_re: value.re,
            estimate_im: value.im,
            achieved_error: error * scale,
        });
    }
    Ok(value)
}
