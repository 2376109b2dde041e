//! Closed-form solution terms and the graded convolution quadrature.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::quadrature::{gauss_jacobi, gauss_legendre, GaussRule};
use crate::real::Real;
use crate::specfun::{rgamma, MittagLeffler};

/// Mittag-Leffler evaluators for one `alpha`, keyed by `beta`. Independent of
/// the mode, so one bank serves every mode of a run.
#[derive(Debug)]
pub struct MlBank<T> {
    alpha: T,
    cache: RwLock<HashMap<u64, Arc<MittagLeffler<T>>>>,
}

impl<T: Real> MlBank<T> {
    pub fn new(alpha: T) -> Result<Self> {
        MittagLeffler::new(alpha, T::one())?;
        Ok(Self {
            alpha,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn get(&self, beta: T) -> Result<Arc<MittagLeffler<T>>> {
        let key = beta.as_f64().to_bits();
        if let Some(e) = self.cache.read().expect("bank lock").get(&key) {
            return Ok(e.clone());
        }
        let e = Arc::new(MittagLeffler::new(self.alpha, beta)?);
        let mut w = self.cache.write().expect("bank lock");
        Ok(w.entry(key).or_insert(e).clone())
    }

    pub fn e(&self, beta: T, z: T) -> Result<T> {
        self.get(beta)?.eval(z)
    }

    /// Prabhakar function with third parameter 2.
    pub fn e2(&self, beta: T, z: T) -> Result<T> {
        let a = self.alpha;
        let lower = self.e(beta - T::one(), z)?;
        let upper = self.e(beta, z)?;
        Ok((lower + (a - beta + T::one()) * upper) / a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermKind {
    /// `s^{beta-1} E_{a,beta}(-b s^a)`
    Ml,
    /// `s^{beta-1} E^2_{a,beta}(-b s^a)`
    Prabhakar2,
}

/// `coef * s^{beta-1} E^{(kind)}_{a,beta}(-b s^a)` in the interval-local time `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term<T> {
    pub coef: T,
    pub beta: T,
    pub kind: TermKind,
}

impl<T: Real> Term<T> {
    pub fn eval(&self, bank: &MlBank<T>, b: T, s: T) -> Result<T> {
        if self.coef == T::zero() {
            return Ok(T::zero());
        }
        let z = -b * s.powf(bank.alpha());
        let e = match self.kind {
            TermKind::Ml => bank.e(self.beta, z)?,
            TermKind::Prabhakar2 => bank.e2(self.beta, z)?,
        };
        if e == T::zero() {
            return Ok(T::zero());
        }
        Ok(self.coef * s.powf(self.beta - T::one()) * e)
    }

    /// The same term after `D^nu` (lower terminal 0); negative `nu` integrates.
    pub fn frac_shift(&self, nu: T) -> Self {
        Self {
            beta: self.beta - nu,
            ..*self
        }
    }
}

/// Analytically convolvable pieces of the source of one interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SourceTerm<T> {
    /// `coef * s^{beta-1} E_{a,beta}(-b s^a)`
    Ml { coef: T, beta: T },
    /// `coef * s^p`, `p > -1`
    Power { coef: T, p: T },
}

impl<T: Real> SourceTerm<T> {
    /// Convolution with `r^{kappa-1} E_{a,kappa}(-b r^a)`.
    pub fn convolve(&self, kappa: T) -> Term<T> {
        match *self {
            Self::Ml { coef, beta } => Term {
                coef,
                beta: kappa + beta,
                kind: TermKind::Prabhakar2,
            },
            Self::Power { coef, p } => Term {
                coef: coef / rgamma(p + T::one()),
                beta: kappa + p + T::one(),
                kind: TermKind::Ml,
            },
        }
    }

    pub fn eval(&self, bank: &MlBank<T>, b: T, s: T) -> Result<T> {
        match *self {
            Self::Ml { coef, beta } => Term {
                coef,
                beta,
                kind: TermKind::Ml,
            }
            .eval(bank, b, s),
            Self::Power { coef, p } => Ok(if coef == T::zero() { T::zero() } else { coef * s.powf(p) }),
        }
    }
}

/// Knobs of the per-interval quadrature and dense output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepperOptions {
    /// Gauss-Legendre points per panel.
    pub panel_nodes: usize,
    /// Gauss-Jacobi points on the innermost panels.
    pub jacobi_nodes: usize,
    /// Minimum number of geometric panels towards the kernel singularity.
    pub kernel_levels: usize,
    /// Geometric panels towards the interval start (for a bounded source).
    pub start_levels: usize,
    /// Chebyshev points per dense-output panel.
    pub dense_nodes: usize,
    /// Minimum number of geometric dense-output panels.
    pub dense_levels: usize,
    /// Panel width cap in units of the kernel time scale `|b|^{-1/alpha}`.
    pub oscillation_width: f64,
}

impl Default for StepperOptions {
    fn default() -> Self {
        Self {
            panel_nodes: 10,
            jacobi_nodes: 16,
            kernel_levels: 10,
            start_levels: 24,
            dense_nodes: 14,
            dense_levels: 28,
            oscillation_width: 3.0,
        }
    }
}

/// Convolution `int_0^s r^{kappa-1} E_{a,kappa}(-b r^a) g(s - r) dr` for a
/// source `g` that may carry an integrable `s^{gamma0}` singularity at 0.
#[derive(Debug, Clone)]
pub struct ConvQuad {
    gl: GaussRule,
    start_inner: GaussRule,
    kernel_inner: Vec<(f64, GaussRule)>,
    opts: StepperOptions,
    alpha: f64,
    b: f64,
    gamma0: f64,
}

impl ConvQuad {
    pub fn new(alpha: f64, b: f64, gamma0: f64, kappas: &[f64], opts: StepperOptions) -> Self {
        let kernel_inner = kappas
            .iter()
            .map(|&k| (k, gauss_jacobi(opts.jacobi_nodes, 0.0, k / alpha - 1.0)))
            .collect();
        Self {
            gl: gauss_legendre(opts.panel_nodes),
            start_inner: gauss_jacobi(opts.jacobi_nodes, 0.0, gamma0),
            kernel_inner,
            opts,
            alpha,
            b,
            gamma0,
        }
    }

    /// Kernel time scale `|b|^{1/alpha}` (0 when `b = 0`).
    pub fn rate(&self) -> f64 {
        self.b.abs().powf(1.0 / self.alpha)
    }

    /// Kernel argument past which `E_{a,k}(-b r^a)` has no oscillating or
    /// exponential part above rounding. Below `alpha = 1` there is none and the
    /// kernel is smooth on a log scale, so dyadic panels resolve it.
    pub fn structured_until(&self) -> f64 {
        if self.alpha < 1.0 || self.b == 0.0 {
            return 0.0;
        }
        let damping = -(std::f64::consts::PI / self.alpha).cos();
        if damping < 1e-3 {
            return f64::INFINITY;
        }
        45.0 / (self.rate() * damping)
    }

    /// Panels needed where the kernel argument runs over `[r0, r1]`.
    fn pieces(&self, r0: f64, r1: f64) -> usize {
        let width = (r1.min(self.structured_until()) - r0.max(0.0)).max(0.0);
        let n = (width * self.rate() / self.opts.oscillation_width).ceil();
        (n.max(1.0) as usize).min(4096)
    }

    fn kernel_levels(&self, half: f64) -> usize {
        let mut k = self.opts.kernel_levels;
        if self.b != 0.0 {
            // innermost panel short enough that |b| eps^alpha <= 1/2
            let eps = (0.5 / self.b.abs()).powf(1.0 / self.alpha);
            let need = (half / eps).log2().ceil();
            if need.is_finite() && need > k as f64 {
                k = need as usize;
            }
        }
        k.min(400)
    }

    fn start_levels(&self) -> usize {
        let l = (self.opts.start_levels as f64 / (1.0 + self.gamma0)).ceil() as usize;
        l.min(160)
    }

    fn inner_rule(&self, kappa: f64) -> Result<&GaussRule> {
        self.kernel_inner
            .iter()
            .find(|(k, _)| (k - kappa).abs() < 1e-14)
            .map(|(_, r)| r)
            .ok_or_else(|| Error::Quadrature(format!("no kernel rule prepared for kappa = {kappa}")))
    }

    fn panels<T: Real, F: FnMut(T) -> Result<T>>(&self, lo: T, hi: T, kernel_args: (T, T), f: &mut F) -> Result<T> {
        let m = self.pieces(kernel_args.0.as_f64(), kernel_args.1.as_f64());
        let h = (hi - lo) / T::from_usize_lossy(m);
        let mut acc = T::zero();
        for j in 0..m {
            let a = lo + h * T::from_usize_lossy(j);
            let b = if j + 1 == m { hi } else { a + h };
            let half = T::lit(0.5) * (b - a);
            let mid = T::lit(0.5) * (a + b);
            for (&x, &w) in self.gl.nodes.iter().zip(&self.gl.weights) {
                acc += f(mid + half * T::lit(x))? * T::lit(w) * half;
            }
        }
        Ok(acc)
    }

    pub fn convolve<T, G>(&self, kappa: T, kernel: &MittagLeffler<T>, s: T, g: &G) -> Result<T>
    where
        T: Real,
        G: Fn(T) -> Result<T>,
    {
        if !(s > T::zero()) {
            return Ok(T::zero());
        }
        let alpha = T::lit(self.alpha);
        let b = T::lit(self.b);
        let one = T::one();
        let two = T::lit(2.0);
        let half = s / two;
        let kern = |r: T| -> Result<T> { Ok(r.powf(kappa - one) * kernel.eval(-b * r.powf(alpha))?) };

        // kernel side, r in [0, s/2]
        let kl = self.kernel_levels(half.as_f64());
        let eps = half * two.powi(-(kl as i32));
        let mut total = T::zero();
        {
            let rule = self.inner_rule(kappa.as_f64())?;
            let vmax = eps.powf(alpha);
            let mut acc = T::zero();
            for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
                let v = vmax * (one + T::lit(x)) / two;
                let r = v.powf(one / alpha);
                acc += T::lit(w) * kernel.eval(-b * v)? * g(s - r)?;
            }
            total += acc * (vmax / two).powf(kappa / alpha) / alpha;
        }
        let mut lo = eps;
        for _ in 0..kl {
            let hi = lo * two;
            total += self.panels(lo, hi, (lo, hi), &mut |r: T| Ok(kern(r)? * g(s - r)?))?;
            lo = hi;
        }

        // start side, sigma in [0, s/2]
        let sl = self.start_levels();
        let delta = half * two.powi(-(sl as i32));
        {
            let g0 = T::lit(self.gamma0);
            let mut acc = T::zero();
            for (&x, &w) in self.start_inner.nodes.iter().zip(&self.start_inner.weights) {
                let sigma = delta * (one + T::lit(x)) / two;
                acc += T::lit(w) * sigma.powf(-g0) * kern(s - sigma)? * g(sigma)?;
            }
            total += acc * (delta / two).powf(g0 + one);
        }
        let mut lo = delta;
        for _ in 0..sl {
            let hi = lo * two;
            total += self.panels(lo, hi, (s - hi, s - lo), &mut |sigma: T| Ok(kern(s - sigma)? * g(sigma)?))?;
            lo = hi;
        }
        if !total.is_finite() {
            return Err(Error::Quadrature(format!(
                "non-finite convolution value at s = {s}"
            )));
        }
        Ok(total)
    }
}
