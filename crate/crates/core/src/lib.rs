//! Evaluation of the Pearcey integral
//! `P(x, y) = ∫₀^∞ exp(-t⁴ - x t²) cos(y t) dt` for complex `x`, `y`.
//!
//! Two independent routes are provided:
//!
//! * [`asymptotics`]: the complete expansion in inverse powers of `y^{2/3}`
//!   for large `|y|` and bounded `|x|`, switching between one and two
//!   saddle contributions according to `arg y`;
//! * [`oracle`]: numerical quadrature, either along the real axis in
//!   extended precision or along a saddle-point contour in double precision.
//!
//! [`tables`] reproduces the relative-error benchmark grids used to judge
//! the expansion against the quadrature.

pub mod asymptotics;
pub mod branch;
pub mod coefficients;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod tables;

pub use num_complex::Complex64;

pub use asymptotics::{
    classify_region, pearcey_asymptotic, stokes_classification, Dominance, DominantTerm, EvalPoint,
    ExpansionResult, Region,
};
pub use coefficients::CoefficientTable;
pub use error::{PearceyError, Result};
pub use geometry::Saddle;
pub use oracle::{pearcey_bar, pearcey_quadrature, relative_error, QuadratureConfig, Strategy};
