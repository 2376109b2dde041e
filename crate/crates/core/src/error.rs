use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library reports. Numeric payloads are stored as `f64`
/// regardless of the scalar the computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at x = {0}")]
    Pole(f64),
    #[error("Mittag-Leffler evaluation not certified at alpha = {alpha}, beta = {beta}, z = {z}: {reason}")]
    Convergence {
        alpha: f64,
        beta: f64,
        z: f64,
        reason: &'static str,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("argument {t} outside the domain [{lo}, {hi}]")]
    Domain { t: f64, lo: f64, hi: f64 },
    #[error("monomial exponent {0} is not integrable (must exceed -1)")]
    Singularity(f64),
    #[error("numerical differentiation error estimate {estimate:e} exceeds tolerance {tol:e}")]
    Accuracy { estimate: f64, tol: f64 },
    #[error("degenerate nonlocal axis: alpha = {alpha}, beta = {beta}")]
    DegenerateAxis { alpha: f64, beta: f64 },
    #[error("mode index {m} outside the index domain of axis {axis}")]
    IndexDomain { axis: usize, m: i64 },
    #[error("axis {axis} has {points} points; at least {required} needed")]
    Alias {
        axis: usize,
        points: usize,
        required: usize,
    },
    #[error("quadrature accuracy target missed: {0}")]
    Quadrature(String),
    #[error("oracle iterate magnitude {value:e} exceeded the stability bound at t = {t}")]
    Stability { value: f64, t: f64 },
    #[error("Chebyshev fit residual {residual:e} exceeds {tol:e} on interval {interval}")]
    Fit {
        residual: f64,
        tol: f64,
        interval: usize,
    },
}
