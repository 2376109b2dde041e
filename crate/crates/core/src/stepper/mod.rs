//! Per-mode method of steps for `D^a T + b T + c T(t - tau) = f(t)`, each
//! interval a fresh Cauchy problem with lower terminal `n tau`.

mod interval;
mod kernel;
mod multiplier;

use std::sync::Arc;

pub use interval::{restart_data, step_interval, Delayed, IntervalSolution, ModeCauchyData, StepContext};
pub use kernel::{ConvQuad, MlBank, SourceTerm, StepperOptions, Term, TermKind};
pub use multiplier::Multiplier;

use crate::basis::EigenData;
use crate::error::{Error, Result};
use crate::fracops::{rl_derivative_with, DiffOptions, FracOrder, SampledFn};
use crate::real::Real;
use crate::specfun::rgamma;

/// Time-dependent scalar data (forcing coefficient, prehistory values).
pub type TimeFn<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

/// Mode coefficient of the solution on `(-tau, 0)`.
#[derive(Clone, Default)]
pub enum Prehistory<T> {
    #[default]
    Zero,
    /// `u(t) = sum c (t + tau)^p`, pairs `(p, c)` with `p > -1`.
    Monomials(Vec<(T, T)>),
    /// Arbitrary values, convolved numerically.
    Function(TimeFn<T>),
}

impl<T: std::fmt::Debug> std::fmt::Debug for Prehistory<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Zero => write!(f, "Zero"),
            Self::Monomials(m) => f.debug_tuple("Monomials").field(m).finish(),
            Self::Function(_) => write!(f, "Function(..)"),
        }
    }
}

impl<T: Real> Prehistory<T> {
    /// Lifts the trace `phi_l(t) = sum_k a_k (t + tau)^k` (given as `D^{a-l} u`)
    /// to `u = D^{l-a} phi_l` with lower terminal `-tau`.
    pub fn from_trace_polynomial(order: FracOrder<T>, coeffs: &[T]) -> Self {
        let nu = order.deficit();
        let terms: Vec<(T, T)> = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != T::zero())
            .map(|(k, &c)| {
                let kk = T::from_usize_lossy(k);
                let g = rgamma(kk + T::one() - nu) / rgamma(kk + T::one());
                (kk - nu, c * g)
            })
            .filter(|(_, c)| *c != T::zero())
            .collect();
        if terms.is_empty() {
            Self::Zero
        } else {
            Self::Monomials(terms)
        }
    }

    pub fn monomials(&self) -> &[(T, T)] {
        match self {
            Self::Monomials(m) => m,
            _ => &[],
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Zero => true,
            Self::Monomials(m) => m.iter().all(|(_, c)| *c == T::zero()),
            Self::Function(_) => false,
        }
    }

    pub(crate) fn has_smooth_part(&self) -> bool {
        matches!(self, Self::Function(_))
    }

    fn check(tau: T, t: T) -> Result<()> {
        if !(t >= -tau && t <= T::zero()) {
            return Err(Error::Domain {
                t: t.as_f64(),
                lo: (-tau).as_f64(),
                hi: 0.0,
            });
        }
        Ok(())
    }

    /// Part not handled in closed form.
    pub(crate) fn smooth_value(&self, tau: T, t: T) -> Result<T> {
        Self::check(tau, t)?;
        Ok(match self {
            Self::Function(f) => f(t),
            _ => T::zero(),
        })
    }

    /// `u(t)` for `t` in `[-tau, 0]`.
    pub fn value(&self, tau: T, t: T) -> Result<T> {
        Self::check(tau, t)?;
        Ok(match self {
            Self::Zero => T::zero(),
            Self::Monomials(m) => {
                let x = t + tau;
                m.iter().map(|&(p, c)| c * x.powf(p)).sum()
            }
            Self::Function(f) => f(t),
        })
    }
}

/// Data of one mode: initial values `phi_i` (`i = 1..l`), prehistory and forcing.
#[derive(Clone, Default)]
pub struct ModeData<T> {
    pub cauchy: Vec<T>,
    pub prehistory: Prehistory<T>,
    pub forcing: Option<TimeFn<T>>,
}

impl<T: Real> ModeData<T> {
    pub fn zero(l: usize) -> Self {
        Self {
            cauchy: vec![T::zero(); l],
            prehistory: Prehistory::Zero,
            forcing: None,
        }
    }
}

/// Solver settings shared by every mode of a run.
#[derive(Debug, Clone)]
pub struct Stepper<T> {
    order: FracOrder<T>,
    tau: T,
    horizon: T,
    opts: StepperOptions,
    bank: Arc<MlBank<T>>,
}

impl<T: Real> Stepper<T> {
    pub fn new(alpha: T, tau: T, horizon: T) -> Result<Self> {
        Self::with_options(alpha, tau, horizon, StepperOptions::default())
    }

    pub fn with_options(alpha: T, tau: T, horizon: T, opts: StepperOptions) -> Result<Self> {
        let order = FracOrder::new(alpha)?;
        if !(alpha > T::zero() && alpha <= T::lit(2.0)) {
            return Err(Error::InvalidParameter(format!(
                "order must lie in (0, 2], got {alpha}"
            )));
        }
        if !(tau > T::zero() && horizon > T::zero()) || !tau.is_finite() || !horizon.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "delay and horizon must be positive (tau = {tau}, T = {horizon})"
            )));
        }
        Ok(Self {
            order,
            tau,
            horizon,
            opts,
            bank: Arc::new(MlBank::new(alpha)?),
        })
    }

    pub fn order(&self) -> FracOrder<T> {
        self.order
    }

    pub fn tau(&self) -> T {
        self.tau
    }

    pub fn horizon(&self) -> T {
        self.horizon
    }

    pub fn bank(&self) -> &Arc<MlBank<T>> {
        &self.bank
    }

    pub fn interval_count(&self) -> usize {
        let n = (self.horizon / self.tau).ceil().to_usize().unwrap_or(1).max(1);
        // guard against ceil(3.0000000000000004) = 4
        let prev = T::from_usize_lossy(n - 1) * self.tau;
        if n > 1 && self.horizon - prev <= T::lit(64.0) * T::epsilon() * self.horizon {
            n - 1
        } else {
            n
        }
    }

    /// Solves `D^a T + b T + c T(t - tau) = f` on `[0, horizon]`.
    pub fn solve(&self, b: T, c: T, data: ModeData<T>) -> Result<ModeTrajectory<T>> {
        let l = self.order.l();
        if data.cauchy.len() != l {
            return Err(Error::InvalidParameter(format!(
                "expected {l} initial values, got {}",
                data.cauchy.len()
            )));
        }
        let ctx = Arc::new(StepContext::new(self.order, self.tau, b, c, self.opts, self.bank.clone())?);
        let prehistory = Arc::new(data.prehistory);
        let count = self.interval_count();
        let mut intervals = Vec::with_capacity(count);
        let mut cauchy = ModeCauchyData {
            values: data.cauchy,
        };
        let mut delayed = Delayed::Prehistory(prehistory.clone());
        for n in 0..count {
            let start = self.tau * T::from_usize_lossy(n);
            let len = if n + 1 == count {
                self.horizon - start
            } else {
                self.tau
            };
            let iv = step_interval(&ctx, n, len, cauchy.clone(), data.forcing.clone(), Some(delayed))?;
            if n + 1 < count {
                cauchy = restart_data(&iv)?;
            }
            delayed = Delayed::Previous(iv.clone());
            intervals.push(iv);
        }
        Ok(ModeTrajectory {
            intervals,
            prehistory,
            tau: self.tau,
            horizon: self.horizon,
        })
    }

    /// Mode problem with `b = B(mu)`, `c = C(mu)`.
    pub fn solve_mode(
        &self,
        eigen: &EigenData<T>,
        b: &Multiplier<T>,
        c: &Multiplier<T>,
        data: ModeData<T>,
    ) -> Result<ModeTrajectory<T>> {
        self.solve(b.eval(eigen.mu)?, c.eval(eigen.mu)?, data)
    }
}

/// `T_m` on `[-tau, horizon]`, stitched from interval descriptors.
#[derive(Debug, Clone)]
pub struct ModeTrajectory<T> {
    intervals: Vec<Arc<IntervalSolution<T>>>,
    prehistory: Arc<Prehistory<T>>,
    tau: T,
    horizon: T,
}

/// One residual evaluation of the mode equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualSample<T> {
    pub residual: T,
    /// Largest magnitude among the balanced terms.
    pub scale: T,
}

impl<T: Real> ResidualSample<T> {
    pub fn relative(&self) -> T {
        if self.scale == T::zero() {
            self.residual.abs()
        } else {
            self.residual.abs() / self.scale
        }
    }
}

impl<T: Real> ModeTrajectory<T> {
    pub fn intervals(&self) -> &[Arc<IntervalSolution<T>>] {
        &self.intervals
    }

    pub fn tau(&self) -> T {
        self.tau
    }

    pub fn horizon(&self) -> T {
        self.horizon
    }

    pub fn prehistory(&self) -> &Prehistory<T> {
        &self.prehistory
    }

    /// Interval holding `t`: `(n tau, (n+1) tau]`, with `t = 0` in the first.
    pub fn interval_index(&self, t: T) -> usize {
        if t <= T::zero() {
            return 0;
        }
        let n = (t / self.tau).ceil().to_usize().unwrap_or(1).max(1) - 1;
        n.min(self.intervals.len() - 1)
    }

    pub fn eval(&self, t: T) -> Result<T> {
        if t < T::zero() {
            return self.prehistory.value(self.tau, t);
        }
        if t > self.horizon * (T::one() + T::lit(64.0) * T::epsilon()) {
            return Err(Error::Domain {
                t: t.as_f64(),
                lo: (-self.tau).as_f64(),
                hi: self.horizon.as_f64(),
            });
        }
        self.intervals[self.interval_index(t)].eval(t)
    }

    /// Restart values `D^{a-i} T` at the start of every interval.
    pub fn restart_values(&self) -> Vec<ModeCauchyData<T>> {
        self.intervals.iter().map(|iv| iv.cauchy.clone()).collect()
    }

    /// `D^a_{n tau} T + b T + c T(t - tau) - f` at local time `s` of interval
    /// `n`. The particular part is differentiated numerically from samples.
    pub fn residual(&self, n: usize, s: T) -> Result<ResidualSample<T>> {
        let iv = self.intervals.get(n).ok_or_else(|| {
            Error::InvalidParameter(format!("interval {n} out of range"))
        })?;
        if !(s > T::zero() && s <= iv.len) {
            return Err(Error::Domain {
                t: (iv.start + s).as_f64(),
                lo: iv.start.as_f64(),
                hi: (iv.start + iv.len).as_f64(),
            });
        }
        let ctx = iv.context();
        let alpha = ctx.order.alpha();
        let bounded = alpha >= T::lit(0.5) || iv.particular_terms().is_empty();
        let (mut d_alpha, sampled): (T, Box<dyn Fn(T) -> Result<T> + '_>) = if bounded {
            (T::zero(), Box::new(|x| iv.particular(x)))
        } else {
            (iv.particular_term_derivative(s)?, Box::new(|x| iv.convolved_part(x)))
        };
        d_alpha += iv.homogeneous_derivative(s)?;

        let len = iv.len;
        // uniform steps of len/2000 down to where a 1.5% geometric step is
        // finer, then geometric toward the start
        let step = len / T::lit(2000.0);
        let ratio = T::lit(1.015);
        let switch = step / (ratio - T::one());
        let mut nodes = vec![len];
        let mut x = len;
        while x - step > switch {
            x -= step;
            nodes.push(x);
        }
        let floor = len * T::lit(2.0).powi(-40);
        while x > floor {
            x /= ratio;
            nodes.push(x);
        }
        nodes.push(T::zero());
        nodes.reverse();
        let values = nodes.iter().map(|&x| sampled(x)).collect::<Result<Vec<T>>>()?;
        let peak = values.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        if peak > T::zero() {
            let scaled: Vec<T> = values.iter().map(|v| *v / peak).collect();
            let f = SampledFn::new(nodes, scaled)?;
            let opts = DiffOptions {
                tol: T::lit(1e-4),
                step_factor: T::lit(4.0),
            };
            d_alpha += peak * rl_derivative_with((&f).into(), ctx.order, T::zero(), s, opts)?;
        }
        let value = iv.eval_local(s)?;
        let source = iv.source(s)?;
        let residual = d_alpha + ctx.b * value - source;
        let scale = d_alpha.abs().max((ctx.b * value).abs()).max(source.abs());
        Ok(ResidualSample { residual, scale })
    }
}
