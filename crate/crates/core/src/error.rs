use thiserror::Error;

/// Errors raised by the coefficient, expansion and quadrature routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PearceyError {
    /// An index or argument violates an operation's stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The operation is undefined at the given point.
    #[error("domain error: {0}")]
    Domain(String),

    /// The request exceeds what the implementation supports (orders, table sizes).
    #[error("capability exceeded: {0}")]
    Capability(String),

    /// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
    #[error("quadrature did not converge: estimate {estimate_re:e}{estimate_im:+e}i, achieved error {achieved_error:e}")]
    Convergence {
        estimate_re: f64,
        estimate_im: f64,
        achieved_error: f64,
    },
}

pub type Result<T> = std::result::Result<T, PearceyError>;
