//! Principal-branch fractional powers.
//!
//! `z^r` is always `exp(r · Log z)` with `arg z ∈ (-π, π]`.

use num_complex::Complex64;

/// `z^r` on the principal branch. `0^r` is `0` for `r > 0`.
pub fn principal_pow(z: Complex64, r: f64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return if r > 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(f64::INFINITY, 0.0)
        };
    }
    (principal_log(z) * r).exp()
}

/// Principal logarithm. A signed zero imaginary part on the negative real
/// axis is treated as `+0` so the argument stays in `(-π, π]`.
pub fn principal_log(z: Complex64) -> Complex64 {
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    Complex64::new(z.norm().ln(), im.atan2(z.re))
}

/// `e^{iφ}`.
pub fn cis(phi: f64) -> Complex64 {
    Complex64::from_polar(1.0, phi)
}

/// `modulus · e^{iπ·arg_pi}`, exactly real when `arg_pi = 0`.
pub fn polar_pi(modulus: f64, arg_pi: f64) -> Complex64 {
    if arg_pi == 0.0 {
        Complex64::new(modulus, 0.0)
    } else {
        cis(std::f64::consts::PI * arg_pi) * modulus
    }
}
