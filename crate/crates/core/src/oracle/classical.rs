//! Classical (`alpha = 1`) method of steps with an exact integrating factor.

use crate::cheb::ChebPanel;
use crate::error::{Error, Result};
use crate::fracops::SampledFn;
use crate::quadrature::{gauss_legendre, GaussRule};
use crate::real::Real;
use crate::stepper::ModeData;

use super::ModeOde;

const FIT_DEGREE: usize = 32;
const FIT_TOL: f64 = 1e-10;

/// Per-interval solution: `T(n tau + s) = e^{-b s} T(n tau) + int_0^s e^{-b(s-x)} g_n(x) dx`,
/// with the delayed term read from a degree-32 Chebyshev fit of the previous interval.
pub struct ClassicalSolution<T> {
    ode: ModeOde<T>,
    data: ModeData<T>,
    starts: Vec<T>,
    fits: Vec<ChebPanel<T>>,
    gl: GaussRule,
}

impl<T: Real> ClassicalSolution<T> {
    fn source(&self, n: usize, x: T) -> Result<T> {
        let t = self.ode.tau * T::from_usize_lossy(n) + x;
        let mut g = self.data.forcing.as_ref().map_or(T::zero(), |f| f(t));
        if self.ode.c != T::zero() {
            let d = if n == 0 {
                self.data.prehistory.value(self.ode.tau, x - self.ode.tau)?
            } else {
                self.fits[n - 1].eval(x)
            };
            g -= self.ode.c * d;
        }
        Ok(g)
    }

    fn local(&self, n: usize, s: T) -> Result<T> {
        let b = self.ode.b;
        if s == T::zero() {
            return Ok(self.starts[n]);
        }
        let panels = ((b.abs() * s / T::lit(2.0)).ceil().to_usize().unwrap_or(1)).clamp(1, 10_000);
        let h = s / T::from_usize_lossy(panels);
        let mut acc = T::zero();
        for p in 0..panels {
            let a = h * T::from_usize_lossy(p);
            let mut err = None;
            let v: T = self.gl.integrate(a, a + h, |x: T| match self.source(n, x) {
                Ok(g) => (-b * (s - x)).exp() * g,
                Err(e) => {
                    err = Some(e);
                    T::zero()
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
            acc += v;
        }
        Ok((-b * s).exp() * self.starts[n] + acc)
    }

    pub fn eval(&self, t: T) -> Result<T> {
        if t < T::zero() {
            return self.data.prehistory.value(self.ode.tau, t);
        }
        let n = if t == T::zero() {
            0
        } else {
            ((t / self.ode.tau).ceil().to_usize().unwrap_or(1).max(1) - 1).min(self.starts.len() - 1)
        };
        self.local(n, t - self.ode.tau * T::from_usize_lossy(n))
    }

    pub fn sample(&self, nodes: Vec<T>) -> Result<SampledFn<T>> {
        let values = nodes.iter().map(|&t| self.eval(t)).collect::<Result<Vec<_>>>()?;
        SampledFn::new(nodes, values)
    }
}

/// Solves the `alpha = 1` mode equation interval by interval.
pub fn classical_steps_solve<T: Real>(ode: &ModeOde<T>, data: &ModeData<T>) -> Result<ClassicalSolution<T>> {
    if ode.alpha != T::one() {
        return Err(Error::InvalidParameter(format!(
            "classical steps need alpha = 1, got {}",
            ode.alpha
        )));
    }
    if data.cauchy.len() != 1 {
        return Err(Error::InvalidParameter("alpha = 1 takes one initial value".into()));
    }
    let count = ((ode.horizon / ode.tau) - T::lit(1e-12)).ceil().to_usize().unwrap_or(1).max(1);
    let mut sol = ClassicalSolution {
        ode: *ode,
        data: data.clone(),
        starts: vec![data.cauchy[0]],
        fits: Vec::new(),
        gl: gauss_legendre(24),
    };
    for n in 0..count {
        if n + 1 == count {
            break;
        }
        let tau = ode.tau;
        let fit = ChebPanel::try_sample(T::zero(), tau, FIT_DEGREE + 1, |x| sol.local(n, x))?;
        // check the fit between its nodes
        let mut worst = T::zero();
        let mut scale = T::zero();
        for k in 0..(2 * FIT_DEGREE) {
            let x = tau * (T::from_usize_lossy(k) + T::lit(0.5)) / T::from_usize_lossy(2 * FIT_DEGREE);
            let exact = sol.local(n, x)?;
            worst = worst.max((fit.eval(x) - exact).abs());
            scale = scale.max(exact.abs());
        }
        if worst > T::lit(FIT_TOL) * scale.max(T::lit(1e-300)) {
            return Err(Error::Fit {
                residual: (worst / scale).as_f64(),
                tol: FIT_TOL,
                interval: n,
            });
        }
        let end = sol.local(n, tau)?;
        sol.starts.push(end);
        sol.fits.push(fit);
    }
    Ok(sol)
}
