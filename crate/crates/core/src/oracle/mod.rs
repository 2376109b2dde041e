//! Independent per-mode solvers used to validate the closed forms: a fractional
//! Adams-Bashforth-Moulton integrator and the classical `alpha = 1` method of steps.

mod abm;
mod classical;

pub use abm::{abm_solve, Corrector, MemoryPolicy, OracleConfig};
pub use classical::{classical_steps_solve, ClassicalSolution};

use crate::real::Real;
use crate::specfun::rgamma;

/// Parameters of `D^a T + b T + c T(t - tau) = f` for one mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeOde<T> {
    pub alpha: T,
    pub tau: T,
    pub horizon: T,
    pub b: T,
    pub c: T,
}

/// `sum coef * s^p / Gamma(p + 1)`; closed under `I^nu` and `D^nu`.
#[derive(Debug, Clone, Default, PartialEq)]
pub(crate) struct PowerSum<T> {
    pub terms: Vec<(T, T)>,
}

impl<T: Real> PowerSum<T> {
    pub fn eval(&self, s: T) -> T {
        self.terms
            .iter()
            .filter(|(c, _)| *c != T::zero())
            .map(|&(c, p)| {
                let r = rgamma(p + T::one());
                if r == T::zero() {
                    T::zero()
                } else {
                    c * s.powf(p) * r
                }
            })
            .sum()
    }

    /// `I^nu` for `nu > 0`, `D^{-nu}` otherwise.
    pub fn integrate(&self, nu: T) -> Self {
        Self {
            terms: self.terms.iter().map(|&(c, p)| (c, p + nu)).collect(),
        }
    }

    pub fn scaled(&self, k: T) -> Self {
        Self {
            terms: self.terms.iter().map(|&(c, p)| (c * k, p)).collect(),
        }
    }

    pub fn extend(&mut self, other: &Self) {
        self.terms.extend_from_slice(&other.terms);
    }
}
