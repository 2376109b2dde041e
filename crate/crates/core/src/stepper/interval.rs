//! One step of the method of steps on `[n tau, n tau + len]`.

use std::sync::Arc;

use rayon::prelude::*;

use super::kernel::{ConvQuad, MlBank, SourceTerm, StepperOptions, Term, TermKind};
use super::{Prehistory, TimeFn};
use crate::cheb::ChebPanel;
use crate::error::{Error, Result};
use crate::fracops::FracOrder;
use crate::real::Real;

/// Fractional initial values `D^{alpha-i} T` at an interval start, `i = 1..l`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeCauchyData<T> {
    pub values: Vec<T>,
}

impl<T: Real> ModeCauchyData<T> {
    pub fn zeros(l: usize) -> Self {
        Self {
            values: vec![T::zero(); l],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| *v == T::zero())
    }
}

/// Per-mode constants shared by all intervals.
#[derive(Debug)]
pub struct StepContext<T> {
    pub order: FracOrder<T>,
    pub tau: T,
    /// `B(mu)`
    pub b: T,
    /// `C(mu)`
    pub c: T,
    pub opts: StepperOptions,
    pub(crate) bank: Arc<MlBank<T>>,
    quad: ConvQuad,
}

impl<T: Real> StepContext<T> {
    pub fn new(order: FracOrder<T>, tau: T, b: T, c: T, opts: StepperOptions, bank: Arc<MlBank<T>>) -> Result<Self> {
        if !(tau > T::zero()) {
            return Err(Error::InvalidParameter(format!("delay must be positive, got {tau}")));
        }
        if bank.alpha() != order.alpha() {
            return Err(Error::InvalidParameter(
                "Mittag-Leffler bank built for another order".into(),
            ));
        }
        let alpha = order.alpha().as_f64();
        let l = order.l();
        let mut kappas: Vec<f64> = (1..=l).map(|i| i as f64).collect();
        kappas.push(alpha);
        let gamma0 = (2.0 * alpha - l as f64).min(0.0);
        let quad = ConvQuad::new(alpha, b.as_f64(), gamma0, &kappas, opts);
        Ok(Self {
            order,
            tau,
            b,
            c,
            opts,
            bank,
            quad,
        })
    }

    pub fn bank(&self) -> &MlBank<T> {
        &self.bank
    }

    fn eval_terms(&self, terms: &[Term<T>], s: T) -> Result<T> {
        let mut acc = T::zero();
        for t in terms {
            acc += t.eval(&self.bank, self.b, s)?;
        }
        Ok(acc)
    }
}

/// What the delayed argument `t - tau` reads on an interval.
#[derive(Clone)]
pub enum Delayed<T> {
    Prehistory(Arc<Prehistory<T>>),
    Previous(Arc<IntervalSolution<T>>),
}

/// Piecewise Chebyshev interpolant on geometric panels. Below the smallest
/// panel the value follows a power law fitted to the two smallest panel edges.
#[derive(Debug, Clone)]
struct Dense<T> {
    inner_hi: T,
    panels: Vec<ChebPanel<T>>,
    /// `(value at inner_hi, exponent)`
    tail: (T, T),
}

impl<T: Real> Dense<T> {
    fn empty() -> Self {
        Self {
            inner_hi: T::zero(),
            panels: Vec::new(),
            tail: (T::zero(), T::one()),
        }
    }

    fn new(inner_hi: T, panels: Vec<ChebPanel<T>>) -> Self {
        let v1 = panels[0].eval(inner_hi);
        let v2 = panels[0].eval(panels[0].hi());
        let ratio = panels[0].hi() / inner_hi;
        let expo = if v1 != T::zero() && v2 != T::zero() && (v1 > T::zero()) == (v2 > T::zero()) {
            ((v2 / v1).ln() / ratio.ln()).max(T::lit(-0.99)).min(T::lit(4.0))
        } else {
            T::one()
        };
        Self {
            inner_hi,
            panels,
            tail: (v1, expo),
        }
    }

    fn eval(&self, s: T) -> T {
        if self.panels.is_empty() {
            return T::zero();
        }
        if s < self.inner_hi {
            let (v, e) = self.tail;
            return v * (s / self.inner_hi).powf(e);
        }
        let idx = self.panels.partition_point(|p| p.hi() < s);
        self.panels[idx.min(self.panels.len() - 1)].eval(s)
    }
}

/// Closed-form descriptor of `T_m` on one interval. Local time `s = t - start`.
pub struct IntervalSolution<T> {
    ctx: Arc<StepContext<T>>,
    pub n: usize,
    pub start: T,
    pub len: T,
    /// Restart values this interval was started from.
    pub cauchy: ModeCauchyData<T>,
    hom: Vec<Term<T>>,
    part: Vec<Term<T>>,
    forcing: Option<TimeFn<T>>,
    delayed: Option<Delayed<T>>,
    smooth_zero: bool,
    dense: Dense<T>,
}

impl<T: std::fmt::Debug> std::fmt::Debug for IntervalSolution<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IntervalSolution")
            .field("n", &self.n)
            .field("start", &self.start)
            .field("len", &self.len)
            .field("cauchy", &self.cauchy)
            .field("hom", &self.hom)
            .field("part", &self.part)
            .finish_non_exhaustive()
    }
}

impl<T: Real> IntervalSolution<T> {
    pub fn context(&self) -> &Arc<StepContext<T>> {
        &self.ctx
    }

    pub fn homogeneous_terms(&self) -> &[Term<T>] {
        &self.hom
    }

    pub fn particular_terms(&self) -> &[Term<T>] {
        &self.part
    }

    /// Source part convolved by quadrature, at local time `sigma`.
    fn remainder(&self, sigma: T) -> Result<T> {
        let mut g = match &self.forcing {
            Some(f) => f(self.start + sigma),
            None => T::zero(),
        };
        if self.ctx.c != T::zero() {
            let d = match &self.delayed {
                Some(Delayed::Prehistory(p)) => p.smooth_value(self.ctx.tau, sigma - self.ctx.tau)?,
                Some(Delayed::Previous(prev)) => prev.smooth_part(sigma)?,
                None => T::zero(),
            };
            g -= self.ctx.c * d;
        }
        Ok(g)
    }

    fn remainder_is_zero(&self) -> bool {
        if self.forcing.is_some() {
            return false;
        }
        if self.ctx.c == T::zero() {
            return true;
        }
        match &self.delayed {
            Some(Delayed::Prehistory(p)) => !p.has_smooth_part(),
            Some(Delayed::Previous(prev)) => prev.smooth_zero && prev.part.is_empty(),
            None => true,
        }
    }

    fn convolve(&self, kappa: T, s: T) -> Result<T> {
        if self.smooth_zero {
            return Ok(T::zero());
        }
        let kern = self.ctx.bank.get(kappa)?;
        self.ctx.quad.convolve(kappa, &kern, s, &|x| self.remainder(x))
    }

    /// Quadrature part of the particular solution.
    pub fn convolved_part(&self, s: T) -> Result<T> {
        if self.smooth_zero {
            return Ok(T::zero());
        }
        Ok(self.dense.eval(s))
    }

    /// Particular solution: closed-form convolutions plus the quadrature part.
    pub fn particular(&self, s: T) -> Result<T> {
        Ok(self.ctx.eval_terms(&self.part, s)? + self.convolved_part(s)?)
    }

    pub fn homogeneous(&self, s: T) -> Result<T> {
        self.ctx.eval_terms(&self.hom, s)
    }

    /// Everything except the homogeneous terms; the next interval convolves this
    /// numerically.
    fn smooth_part(&self, s: T) -> Result<T> {
        self.particular(s)
    }

    /// `T_m(start + s)`.
    pub fn eval_local(&self, s: T) -> Result<T> {
        Ok(self.homogeneous(s)? + self.particular(s)?)
    }

    pub fn eval(&self, t: T) -> Result<T> {
        let s = t - self.start;
        let tol = T::lit(64.0) * T::epsilon() * self.len.max(self.start.abs());
        if s < -tol || s > self.len + tol {
            return Err(Error::Domain {
                t: t.as_f64(),
                lo: self.start.as_f64(),
                hi: (self.start + self.len).as_f64(),
            });
        }
        self.eval_local(s.max(T::zero()).min(self.len))
    }

    /// `D^{alpha-i}_{start} T` at `start + s`, `i = 1..l`.
    pub fn fractional_values(&self, s: T) -> Result<ModeCauchyData<T>> {
        let alpha = self.ctx.order.alpha();
        let l = self.ctx.order.l();
        let mut values = Vec::with_capacity(l);
        for i in 1..=l {
            let ti = T::from_usize_lossy(i);
            let nu = alpha - ti;
            let mut v = T::zero();
            for t in self.hom.iter().chain(&self.part) {
                v += t.frac_shift(nu).eval(&self.ctx.bank, self.ctx.b, s)?;
            }
            v += self.convolve(ti, s)?;
            values.push(v);
        }
        Ok(ModeCauchyData { values })
    }

    /// `D^alpha_{start} T - B T`-style quantities need the homogeneous terms after
    /// `D^alpha`; exposed for the residual check.
    pub(crate) fn homogeneous_derivative(&self, s: T) -> Result<T> {
        let alpha = self.ctx.order.alpha();
        let mut v = T::zero();
        for t in &self.hom {
            v += t.frac_shift(alpha).eval(&self.ctx.bank, self.ctx.b, s)?;
        }
        Ok(v)
    }

    pub(crate) fn particular_term_derivative(&self, s: T) -> Result<T> {
        let alpha = self.ctx.order.alpha();
        let mut v = T::zero();
        for t in &self.part {
            v += t.frac_shift(alpha).eval(&self.ctx.bank, self.ctx.b, s)?;
        }
        Ok(v)
    }

    /// Forcing minus delayed term, `f(t) - C T(t - tau)`, at local time `s`.
    pub fn source(&self, s: T) -> Result<T> {
        let mut g = match &self.forcing {
            Some(f) => f(self.start + s),
            None => T::zero(),
        };
        if self.ctx.c != T::zero() {
            let d = match &self.delayed {
                Some(Delayed::Prehistory(p)) => p.value(self.ctx.tau, s - self.ctx.tau)?,
                Some(Delayed::Previous(prev)) => prev.eval_local(s)?,
                None => T::zero(),
            };
            g -= self.ctx.c * d;
        }
        Ok(g)
    }

    fn build_dense(&mut self) -> Result<()> {
        if self.smooth_zero || !(self.len > T::zero()) {
            self.dense = Dense::empty();
            return Ok(());
        }
        let opts = self.ctx.opts;
        let rate = self.ctx.quad.rate();
        let len = self.len.as_f64();
        let levels = ((1.0 + rate * len).log2() + 16.0).ceil().max(opts.dense_levels as f64) as usize;
        let cap = 4.0 / rate.max(1e-300);
        // resonant responses carry polynomial factors, hence the margin
        let structured = 3.0 * self.ctx.quad.structured_until();
        let mut bounds: Vec<(T, T)> = Vec::new();
        let mut hi = self.len;
        for _ in 0..levels {
            let lo = hi / T::lit(2.0);
            let width = (hi.as_f64().min(structured) - lo.as_f64()).max(0.0);
            let m = ((width / cap).ceil().max(1.0) as usize).min(4096);
            let h = (hi - lo) / T::from_usize_lossy(m);
            for j in (0..m).rev() {
                let a = lo + h * T::from_usize_lossy(j);
                let b = if j + 1 == m { hi } else { a + h };
                bounds.push((a, b));
            }
            hi = lo;
        }
        bounds.reverse();
        let inner_hi = hi;
        let alpha = self.ctx.order.alpha();
        let n = opts.dense_nodes;
        let this = &*self;
        let panels: Vec<ChebPanel<T>> = bounds
            .par_iter()
            .map(|&(a, b)| ChebPanel::try_sample(a, b, n, |x| this.convolve(alpha, x)))
            .collect::<Result<_>>()?;
        self.dense = Dense::new(inner_hi, panels);
        Ok(())
    }
}

/// Solves one interval. `delayed` supplies `T(t - tau)`; `cauchy` the restart
/// values at the interval start.
pub fn step_interval<T: Real>(
    ctx: &Arc<StepContext<T>>,
    n: usize,
    len: T,
    cauchy: ModeCauchyData<T>,
    forcing: Option<TimeFn<T>>,
    delayed: Option<Delayed<T>>,
) -> Result<Arc<IntervalSolution<T>>> {
    let l = ctx.order.l();
    if cauchy.values.len() != l {
        return Err(Error::InvalidParameter(format!(
            "expected {l} initial values, got {}",
            cauchy.values.len()
        )));
    }
    let alpha = ctx.order.alpha();
    let hom = cauchy
        .values
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != T::zero())
        .map(|(j, &v)| Term {
            coef: v,
            beta: alpha - T::from_usize_lossy(j + 1) + T::one(),
            kind: TermKind::Ml,
        })
        .collect();

    let mut sources: Vec<SourceTerm<T>> = Vec::new();
    if ctx.c != T::zero() {
        match &delayed {
            Some(Delayed::Prehistory(p)) => {
                for &(pw, k) in p.monomials() {
                    sources.push(SourceTerm::Power { coef: -ctx.c * k, p: pw });
                }
            }
            Some(Delayed::Previous(prev)) => {
                for t in &prev.hom {
                    sources.push(SourceTerm::Ml {
                        coef: -ctx.c * t.coef,
                        beta: t.beta,
                    });
                }
            }
            None => {}
        }
    }
    let part = sources
        .iter()
        .filter(|s| !matches!(s, SourceTerm::Ml { coef, .. } | SourceTerm::Power { coef, .. } if *coef == T::zero()))
        .map(|s| s.convolve(alpha))
        .collect();

    let mut iv = IntervalSolution {
        ctx: ctx.clone(),
        n,
        start: ctx.tau * T::from_usize_lossy(n),
        len,
        cauchy,
        hom,
        part,
        forcing,
        delayed,
        smooth_zero: false,
        dense: Dense::empty(),
    };
    iv.smooth_zero = iv.remainder_is_zero();
    iv.build_dense()?;
    Ok(Arc::new(iv))
}

/// Restart values `D^{alpha-i}_{n tau} T` at the right end of the interval.
pub fn restart_data<T: Real>(iv: &IntervalSolution<T>) -> Result<ModeCauchyData<T>> {
    iv.fractional_values(iv.len)
}
