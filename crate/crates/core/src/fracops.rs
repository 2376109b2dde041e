//! Riemann-Liouville fractional integrals and derivatives.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::specfun::{gamma, rgamma};

/// Derivative order `alpha >= 0` together with `l = -floor(-alpha)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracOrder<T> {
    alpha: T,
    l: usize,
}

impl<T: Real> FracOrder<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if !(alpha >= T::zero()) || !alpha.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "fractional order must be finite and non-negative, got {alpha}"
            )));
        }
        let l = alpha.ceil().to_usize().unwrap_or(0);
        Ok(Self { alpha, l })
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// `l - alpha`, in `[0, 1)`.
    pub fn deficit(&self) -> T {
        T::from_usize_lossy(self.l) - self.alpha
    }

    pub fn is_integer(&self) -> bool {
        self.alpha == self.alpha.floor()
    }
}

/// Piecewise-linear samples on strictly increasing nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFn<T> {
    nodes: Vec<T>,
    values: Vec<T>,
}

impl<T: Real> SampledFn<T> {
    pub fn new(nodes: Vec<T>, values: Vec<T>) -> Result<Self> {
        if nodes.len() < 2 || nodes.len() != values.len() {
            return Err(Error::InvalidParameter(format!(
                "sampled function needs >= 2 nodes and matching values ({} nodes, {} values)",
                nodes.len(),
                values.len()
            )));
        }
        if nodes.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidParameter(
                "sampled function nodes must be strictly increasing".into(),
            ));
        }
        Ok(Self { nodes, values })
    }

    pub fn from_fn<F: FnMut(T) -> T>(nodes: Vec<T>, mut f: F) -> Result<Self> {
        let values = nodes.iter().map(|&x| f(x)).collect();
        Self::new(nodes, values)
    }

    /// `n` equally spaced nodes on `[a, b]`.
    pub fn uniform<F: FnMut(T) -> T>(a: T, b: T, n: usize, f: F) -> Result<Self> {
        let nodes = uniform_nodes(a, b, n);
        Self::from_fn(nodes, f)
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn start(&self) -> T {
        self.nodes[0]
    }

    pub fn end(&self) -> T {
        self.nodes[self.nodes.len() - 1]
    }

    fn check_span(&self, t: T) -> Result<()> {
        if t < self.start() || t > self.end() || t.is_nan() {
            return Err(Error::Domain {
                t: t.as_f64(),
                lo: self.start().as_f64(),
                hi: self.end().as_f64(),
            });
        }
        Ok(())
    }

    /// Index `i` with `nodes[i] <= t <= nodes[i + 1]`.
    fn segment(&self, t: T) -> usize {
        let i = self.nodes.partition_point(|&x| x <= t);
        i.clamp(1, self.nodes.len() - 1) - 1
    }

    /// Linear interpolation.
    pub fn eval(&self, t: T) -> Result<T> {
        self.check_span(t)?;
        let i = self.segment(t);
        let (x0, x1) = (self.nodes[i], self.nodes[i + 1]);
        let (y0, y1) = (self.values[i], self.values[i + 1]);
        Ok(y0 + (y1 - y0) * (t - x0) / (x1 - x0))
    }

    /// Smallest node spacing around `t`.
    fn local_step(&self, t: T) -> T {
        let i = self.segment(t);
        let mut h = self.nodes[i + 1] - self.nodes[i];
        if i > 0 {
            h = h.min(self.nodes[i] - self.nodes[i - 1]);
        }
        if i + 2 < self.nodes.len() {
            h = h.min(self.nodes[i + 2] - self.nodes[i + 1]);
        }
        h
    }
}

pub fn uniform_nodes<T: Real>(a: T, b: T, n: usize) -> Vec<T> {
    assert!(n >= 2);
    let h = (b - a) / T::from_usize_lossy(n - 1);
    (0..n)
        .map(|i| if i == n - 1 { b } else { a + h * T::from_usize_lossy(i) })
        .collect()
}

/// Function argument of the operators: sampled data or `coeff * (t - a)^gamma`.
#[derive(Debug, Clone, Copy)]
pub enum Integrand<'a, T> {
    Sampled(&'a SampledFn<T>),
    Monomial { coeff: T, gamma: T },
}

impl<'a, T> From<&'a SampledFn<T>> for Integrand<'a, T> {
    fn from(f: &'a SampledFn<T>) -> Self {
        Integrand::Sampled(f)
    }
}

fn check_order<T: Real>(t: T, a: T) -> Result<()> {
    if t < a || t.is_nan() {
        return Err(Error::Domain {
            t: t.as_f64(),
            lo: a.as_f64(),
            hi: f64::INFINITY,
        });
    }
    Ok(())
}

/// `D^{-nu}` applied to `c (t - a)^gamma`, i.e. the exact power rule
/// `c Gamma(gamma+1)/Gamma(gamma+1+nu) (t-a)^(gamma+nu)`; `nu` may be negative.
pub fn monomial_power_rule<T: Real>(coeff: T, gam: T, nu: T, a: T, t: T) -> Result<T> {
    if !(gam > -T::one()) {
        return Err(Error::Singularity(gam.as_f64()));
    }
    check_order(t, a)?;
    let factor = gamma(gam + T::one())? * rgamma(gam + T::one() + nu);
    if factor == T::zero() || coeff == T::zero() {
        return Ok(T::zero());
    }
    let e = gam + nu;
    let dt = t - a;
    let p = if dt == T::zero() {
        if e > T::zero() {
            T::zero()
        } else if e == T::zero() {
            T::one()
        } else {
            T::infinity()
        }
    } else {
        dt.powf(e)
    };
    Ok(coeff * factor * p)
}

/// `int_{u1}^{u2} u^{nu-1} du` and `int_{u1}^{u2} u^{nu} du` for `0 <= u1 < u2`.
fn power_moments<T: Real>(u1: T, u2: T, nu: T) -> (T, T) {
    let m0 = (u2.powf(nu) - u1.powf(nu)) / nu;
    let m1 = (u2.powf(nu + T::one()) - u1.powf(nu + T::one())) / (nu + T::one());
    (m0, m1)
}

/// Product integration of the piecewise-linear interpolant against
/// `(t - s)^{nu - 1} / Gamma(nu)` over `[a, t]`.
fn sampled_integral<T: Real>(f: &SampledFn<T>, nu: T, a: T, t: T) -> Result<T> {
    f.check_span(a)?;
    f.check_span(t)?;
    check_order(t, a)?;
    if t == a {
        return Ok(T::zero());
    }
    let mut knots = vec![a];
    knots.extend(f.nodes.iter().copied().filter(|&x| x > a && x < t));
    knots.push(t);
    let mut acc = T::zero();
    let mut prev_v = f.eval(a)?;
    for w in knots.windows(2) {
        let (p, q) = (w[0], w[1]);
        let qv = f.eval(q)?;
        let (u1, u2) = (t - q, t - p);
        let (m0, m1) = power_moments(u1, u2, nu);
        // f_lin = [f_p (u - u1) + f_q (u2 - u)] / (u2 - u1)
        let lower = m1 - u1 * m0;
        let upper = u2 * m0 - m1;
        acc += (prev_v * lower + qv * upper) / (u2 - u1);
        prev_v = qv;
    }
    Ok(acc * rgamma(nu))
}

/// Fractional integral of order `nu > 0` with lower terminal `a`, at `t`.
pub fn rl_integral<T: Real>(f: Integrand<'_, T>, nu: T, a: T, t: T) -> Result<T> {
    if !(nu > T::zero()) {
        return Err(Error::InvalidParameter(format!(
            "integral order must be positive, got {nu}"
        )));
    }
    match f {
        Integrand::Monomial { coeff, gamma } => monomial_power_rule(coeff, gamma, nu, a, t),
        Integrand::Sampled(s) => sampled_integral(s, nu, a, t),
    }
}

/// Settings of the numerical differentiation used on sampled data.
#[derive(Debug, Clone, Copy)]
pub struct DiffOptions<T> {
    /// Accepted error estimate, relative to `max(1, |value|)`.
    pub tol: T,
    /// Stencil step as a multiple of the local node spacing.
    pub step_factor: T,
}

impl<T: Real> Default for DiffOptions<T> {
    fn default() -> Self {
        Self {
            tol: T::lit(1e-5),
            step_factor: T::lit(4.0),
        }
    }
}

fn stencil<T: Real, G: Fn(T) -> Result<T>>(g: &G, t: T, h: T, l: usize, lo: T, hi: T) -> Result<T> {
    let two = T::lit(2.0);
    let twelve = T::lit(12.0);
    let c = |k: f64| T::lit(k);
    if t - two * h >= lo && t + two * h <= hi {
        let (m2, m1, p1, p2) = (g(t - two * h)?, g(t - h)?, g(t + h)?, g(t + two * h)?);
        return Ok(match l {
            1 => (m2 - c(8.0) * m1 + c(8.0) * p1 - p2) / (twelve * h),
            _ => {
                let z = g(t)?;
                (-m2 + c(16.0) * m1 - c(30.0) * z + c(16.0) * p1 - p2) / (twelve * h * h)
            }
        });
    }
    let dir = if t - two * h < lo { T::one() } else { -T::one() };
    let s = dir * h;
    let v: Vec<T> = (0..5)
        .map(|k| g(t + s * T::from_usize_lossy(k)))
        .collect::<Result<_>>()?;
    Ok(match l {
        1 => (c(-25.0) * v[0] + c(48.0) * v[1] - c(36.0) * v[2] + c(16.0) * v[3] - c(3.0) * v[4])
            / (twelve * s),
        _ => (c(35.0) * v[0] - c(104.0) * v[1] + c(114.0) * v[2] - c(56.0) * v[3]
            + c(11.0) * v[4])
            / (twelve * h * h),
    })
}

/// `d^l/dt^l g(t)` by five-point stencils with one step halving and
/// Richardson extrapolation; `l` is 1 or 2.
pub fn differentiate<T: Real, G: Fn(T) -> Result<T>>(
    g: G,
    t: T,
    l: usize,
    h: T,
    lo: T,
    hi: T,
    tol: T,
) -> Result<T> {
    if l == 0 {
        return g(t);
    }
    if l > 2 {
        return Err(Error::InvalidParameter(format!(
            "numerical differentiation supports orders 1 and 2, got {l}"
        )));
    }
    let h = h.min((hi - lo) / T::lit(8.0));
    let coarse = stencil(&g, t, h, l, lo, hi)?;
    let fine = stencil(&g, t, h / T::lit(2.0), l, lo, hi)?;
    let est = (coarse - fine).abs();
    let value = (T::lit(16.0) * fine - coarse) / T::lit(15.0);
    if !(est <= tol * value.abs().max(T::one())) {
        return Err(Error::Accuracy {
            estimate: est.as_f64(),
            tol: tol.as_f64(),
        });
    }
    Ok(value)
}

/// Fractional derivative `D^alpha` with lower terminal `a`, at `t`.
pub fn rl_derivative<T: Real>(f: Integrand<'_, T>, order: FracOrder<T>, a: T, t: T) -> Result<T> {
    rl_derivative_with(f, order, a, t, DiffOptions::default())
}

pub fn rl_derivative_with<T: Real>(
    f: Integrand<'_, T>,
    order: FracOrder<T>,
    a: T,
    t: T,
    opts: DiffOptions<T>,
) -> Result<T> {
    let alpha = order.alpha();
    match f {
        Integrand::Monomial { coeff, gamma } => monomial_power_rule(coeff, gamma, -alpha, a, t),
        Integrand::Sampled(s) => {
            if alpha == T::zero() {
                return s.eval(t);
            }
            s.check_span(a)?;
            s.check_span(t)?;
            check_order(t, a)?;
            let l = order.l();
            let nu = order.deficit();
            let h = s.local_step(t) * opts.step_factor;
            let hi = s.end();
            if nu == T::zero() {
                return differentiate(|x| s.eval(x), t, l, h, s.start().max(a), hi, opts.tol);
            }
            differentiate(|x| sampled_integral(s, nu, a, x), t, l, h, a, hi, opts.tol)
        }
    }
}

/// Reconstructs the solution on the prehistory window from the trace
/// `phi_l = D^{alpha - l} u` on `(-tau, 0)`: returns `D^{l - alpha} phi_l` at
/// `t`, with lower terminal `-tau`.
pub fn prehistory_lift<T: Real>(
    phi_l: Integrand<'_, T>,
    order: FracOrder<T>,
    tau: T,
    t: T,
) -> Result<T> {
    if !(t > -tau && t <= T::zero()) {
        return Err(Error::Domain {
            t: t.as_f64(),
            lo: (-tau).as_f64(),
            hi: 0.0,
        });
    }
    let nu = order.deficit();
    match phi_l {
        Integrand::Sampled(s) if nu == T::zero() => s.eval(t),
        _ => rl_derivative(phi_l, FracOrder::new(nu)?, -tau, t),
    }
}
