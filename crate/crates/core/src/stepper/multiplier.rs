use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::Real;

/// Spectral multiplier `g(mu)` acting diagonally on the eigenbasis; `mu` is the
/// eigenvalue of `-Laplace`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Multiplier<T> {
    /// `c * mu`
    ScaledEigenvalue { c: T },
    /// `c * mu^sigma`
    Power { c: T, sigma: T },
    /// `sum_k coeffs[k] * mu^k`
    Polynomial { coeffs: Vec<T> },
}

impl<T: Real> Multiplier<T> {
    pub fn zero() -> Self {
        Self::ScaledEigenvalue { c: T::zero() }
    }

    pub fn eval(&self, mu: T) -> Result<T> {
        if !(mu >= T::zero()) {
            return Err(Error::InvalidParameter(format!(
                "multipliers are defined for mu >= 0, got {mu}"
            )));
        }
        Ok(match self {
            Self::ScaledEigenvalue { c } => *c * mu,
            Self::Power { c, sigma } => {
                if mu == T::zero() {
                    if *sigma == T::zero() {
                        *c
                    } else {
                        T::zero()
                    }
                } else {
                    *c * mu.powf(*sigma)
                }
            }
            Self::Polynomial { coeffs } => coeffs.iter().rev().fold(T::zero(), |acc, &k| acc * mu + k),
        })
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::ScaledEigenvalue { c } | Self::Power { c, .. } => *c == T::zero(),
            Self::Polynomial { coeffs } => coeffs.iter().all(|c| *c == T::zero()),
        }
    }
}
