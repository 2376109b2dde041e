//! Fractional Adams-Bashforth-Moulton integrator with product-trapezoid memory
//! weights on a grid graded towards every interval start.

use crate::error::{Error, Result};
use crate::fracops::{FracOrder, SampledFn};
use crate::quadrature::gauss_jacobi;
use crate::real::Real;
use crate::specfun::{gamma, rgamma};
use crate::stepper::{ModeData, Prehistory};

use super::{ModeOde, PowerSum};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MemoryPolicy {
    /// One Volterra problem with lower terminal 0.
    FullMemory,
    /// A fresh problem with lower terminal `n tau` on every interval.
    Restart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Corrector {
    /// Linear corrector equation solved exactly.
    Implicit,
    /// Product-rectangle predictor, one trapezoid correction.
    Pece,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig<T> {
    pub h: T,
    pub corrector: Corrector,
    pub memory: MemoryPolicy,
    /// Geometric sub-steps (ratio 2) inside the first step of each interval.
    pub graded_steps: usize,
}

impl<T: Real> OracleConfig<T> {
    pub fn new(h: T, tau: T) -> Result<Self> {
        let steps = (tau / h).round();
        if !(h > T::zero()) || (steps * h - tau).abs() > T::lit(1e-9) * tau {
            return Err(Error::InvalidParameter(format!(
                "oracle step {h} must divide the delay {tau}"
            )));
        }
        if steps < T::lit(64.0) {
            return Err(Error::InvalidParameter(format!(
                "oracle step {h} exceeds tau / 64"
            )));
        }
        Ok(Self {
            h,
            corrector: Corrector::Implicit,
            memory: MemoryPolicy::Restart,
            graded_steps: 8,
        })
    }

    pub fn with_memory(mut self, memory: MemoryPolicy) -> Self {
        self.memory = memory;
        self
    }

    pub fn with_corrector(mut self, corrector: Corrector) -> Self {
        self.corrector = corrector;
        self
    }
}

const BLOWUP: f64 = 1e12;

/// Local nodes of one interval: 0, the graded block, then multiples of `h`.
fn local_grid<T: Real>(h: T, steps: usize, graded: usize, len: T) -> Vec<T> {
    let mut s = vec![T::zero()];
    for k in (1..=graded).rev() {
        s.push(h * T::lit(2.0).powi(-(k as i32)));
    }
    let mut j = 1;
    while j <= steps {
        let x = h * T::from_usize_lossy(j);
        if x > len * (T::one() + T::lit(1e-12)) {
            break;
        }
        s.push(x);
        j += 1;
    }
    if *s.last().unwrap() < len * (T::one() - T::lit(1e-12)) {
        s.push(len);
    }
    s
}

/// `A^nu - B^nu` without cancellation for `A > B >= 0`.
fn pow_diff<T: Real>(a: T, b: T, nu: T) -> T {
    if b == T::zero() {
        a.powf(nu)
    } else {
        b.powf(nu) * (nu * (a / b).ln()).exp_m1()
    }
}

/// Product-integration weights of `I^nu` at node `n` for piecewise linear data
/// (`trapezoid`) or piecewise constant left values.
fn weights<T: Real>(t: &[T], n: usize, nu: T, trapezoid: bool) -> Vec<T> {
    let mut w = vec![T::zero(); n + 1];
    let g = rgamma(nu);
    let tn = t[n];
    for k in 0..n {
        let a = tn - t[k];
        let b = tn - t[k + 1];
        let hk = t[k + 1] - t[k];
        let m0 = pow_diff(a, b, nu) / nu;
        if !trapezoid {
            w[k] += m0 * g;
            continue;
        }
        // int_B^A v^{nu-1} (A - v) dv
        let m1 = a * m0 - pow_diff(a, b, nu + T::one()) / (nu + T::one());
        w[k + 1] += m1 / hk * g;
        w[k] += (m0 - m1 / hk) * g;
    }
    w
}

fn prehistory_split<T: Real>(p: &Prehistory<T>) -> Result<(PowerSum<T>, bool)> {
    Ok(match p {
        Prehistory::Zero => (PowerSum::default(), false),
        Prehistory::Monomials(m) => (
            PowerSum {
                terms: m
                    .iter()
                    .map(|&(pw, c)| Ok((c * gamma(pw + T::one())?, pw)))
                    .collect::<Result<_>>()?,
            },
            false,
        ),
        Prehistory::Function(_) => (PowerSum::default(), true),
    })
}

fn cauchy_sum<T: Real>(alpha: T, psi: &[T]) -> PowerSum<T> {
    PowerSum {
        terms: psi
            .iter()
            .enumerate()
            .map(|(j, &v)| (v, alpha - T::from_usize_lossy(j + 1)))
            .collect(),
    }
}

fn check<T: Real>(v: T, t: T) -> Result<T> {
    if !v.is_finite() || v.abs() > T::lit(BLOWUP) {
        return Err(Error::Stability {
            value: v.as_f64(),
            t: t.as_f64(),
        });
    }
    Ok(v)
}

/// Grid solution of the mode equation. `T = H + Y` where `H` carries the
/// Cauchy data in closed form and `Y` solves a Volterra equation with bounded
/// integrand.
pub fn abm_solve<T: Real>(ode: &ModeOde<T>, data: &ModeData<T>, cfg: &OracleConfig<T>) -> Result<SampledFn<T>> {
    let order = FracOrder::new(ode.alpha)?;
    if !(ode.alpha > T::zero() && ode.alpha <= T::lit(2.0)) {
        return Err(Error::InvalidParameter(format!("oracle order {} outside (0, 2]", ode.alpha)));
    }
    if data.cauchy.len() != order.l() {
        return Err(Error::InvalidParameter(format!(
            "expected {} initial values, got {}",
            order.l(),
            data.cauchy.len()
        )));
    }
    OracleConfig::new(cfg.h, ode.tau)?;
    match cfg.memory {
        MemoryPolicy::Restart => restart_solve(ode, order, data, cfg),
        MemoryPolicy::FullMemory => full_solve(ode, data, cfg),
    }
}

struct Step<T> {
    /// corrector weights `w[j][k]`
    trap: Vec<Vec<T>>,
    rect: Vec<Vec<T>>,
}

fn build_weights<T: Real>(t: &[T], nu: T, pece: bool) -> Step<T> {
    let n = t.len();
    let trap = (0..n).map(|j| weights(t, j, nu, true)).collect();
    let rect = if pece {
        (0..n).map(|j| weights(t, j, nu, false)).collect()
    } else {
        Vec::new()
    };
    Step { trap, rect }
}

/// Marches `Y_j = I^a[G]_j + exact_j` with `G = rhs_j - b Y_j`.
fn march<T: Real>(
    st: &Step<T>,
    times: &[T],
    b: T,
    rhs: &[T],
    exact: &[T],
    corrector: Corrector,
) -> Result<Vec<T>> {
    let n = times.len();
    let mut y = vec![T::zero(); n];
    let mut g = vec![T::zero(); n];
    y[0] = exact[0];
    g[0] = rhs[0] - b * y[0];
    for j in 1..n {
        let w = &st.trap[j];
        let hist: T = (0..j).map(|k| w[k] * g[k]).sum();
        let yj = match corrector {
            Corrector::Implicit => (hist + w[j] * rhs[j] + exact[j]) / (T::one() + b * w[j]),
            Corrector::Pece => {
                let pred: T = (0..j).map(|k| st.rect[j][k] * g[k]).sum::<T>() + exact[j];
                hist + w[j] * (rhs[j] - b * pred) + exact[j]
            }
        };
        y[j] = check(yj, times[j])?;
        g[j] = rhs[j] - b * y[j];
    }
    Ok(y)
}

/// Splits `T = P + Y` for `T = Q - b I^a[T] + ...` with `Q` a power sum: `P`
/// collects the Picard terms `(-b I^a)^k Q` while the remainder would be
/// unbounded, or would be non-smooth and the terms do not grow over `[0, len]`
/// (a growing partial sum leaves a large, steep remainder); returns `P` and the
/// first omitted term, which enters the remainder equation exactly.
fn picard_split<T: Real>(first: PowerSum<T>, alpha: T, b: T, len: T) -> (PowerSum<T>, PowerSum<T>) {
    let size = |p: &PowerSum<T>| -> T {
        p.terms
            .iter()
            .map(|&(c, q)| (c * len.powf(q) * rgamma(q + T::one())).abs())
            .sum()
    };
    let min_exp = |p: &PowerSum<T>| -> T {
        p.terms
            .iter()
            .filter(|(c, _)| *c != T::zero())
            .fold(T::infinity(), |m, &(_, q)| m.min(q))
    };
    let base = size(&first).max(T::min_positive_value());
    let mut total = first.clone();
    let mut block = first;
    for _ in 0..32 {
        let next = block.integrate(alpha).scaled(-b);
        let e = min_exp(&next);
        if e >= T::zero() && (e >= T::lit(2.0) || size(&next) > base) {
            return (total, next);
        }
        total.extend(&next);
        block = next;
    }
    let next = block.integrate(alpha).scaled(-b);
    (total, next)
}

fn restart_solve<T: Real>(
    ode: &ModeOde<T>,
    order: FracOrder<T>,
    data: &ModeData<T>,
    cfg: &OracleConfig<T>,
) -> Result<SampledFn<T>> {
    let alpha = ode.alpha;
    let l = order.l();
    let steps = (ode.tau / cfg.h).round().to_usize().unwrap_or(64);
    let count = ((ode.horizon / ode.tau) - T::lit(1e-12)).ceil().to_usize().unwrap_or(1).max(1);
    let grid = local_grid(cfg.h, steps, cfg.graded_steps, ode.tau);
    let st = build_weights(&grid, alpha, cfg.corrector == Corrector::Pece);
    let last = grid.len() - 1;
    let int_w: Vec<Vec<T>> = (1..=l).map(|i| weights(&grid, last, T::from_usize_lossy(i), true)).collect();

    let (pre_exact, pre_fn) = prehistory_split(&data.prehistory)?;
    let mut psi = data.cauchy.clone();
    let mut prev_p = PowerSum::default();
    let mut prev_y: Vec<T> = Vec::new();
    let mut nodes = Vec::new();
    let mut values = Vec::new();

    for n in 0..count {
        let start = ode.tau * T::from_usize_lossy(n);
        let force = |s: T| data.forcing.as_ref().map_or(T::zero(), |f| f(start + s));
        let f0 = force(T::zero());
        // exact part of the source: delayed power sum and the forcing at the start
        let mut e_src = if n == 0 { pre_exact.clone() } else { prev_p.clone() }.scaled(-ode.c);
        e_src.terms.push((f0, T::zero()));
        let mut q = cauchy_sum(alpha, &psi);
        q.extend(&e_src.integrate(alpha));
        let (p_sum, x_sum) = picard_split(q, alpha, ode.b, ode.tau);

        let d_grid: Vec<T> = if n == 0 {
            grid.iter()
                .map(|&s| {
                    if pre_fn {
                        data.prehistory.value(ode.tau, s - ode.tau)
                    } else {
                        Ok(T::zero())
                    }
                })
                .collect::<Result<_>>()?
        } else {
            prev_y.clone()
        };
        let rhs: Vec<T> = grid
            .iter()
            .zip(&d_grid)
            .map(|(&s, &d)| force(s) - f0 - ode.c * d)
            .collect();
        let exact: Vec<T> = grid.iter().map(|&s| x_sum.eval(s)).collect();
        let y = march(&st, &grid, ode.b, &rhs, &exact, cfg.corrector)?;

        let begin = if n == 0 { 0 } else { 1 };
        for j in begin..grid.len() {
            let s = grid[j];
            if start + s > ode.horizon * (T::one() + T::lit(1e-12)) {
                break;
            }
            nodes.push(start + s);
            values.push(p_sum.eval(s) + y[j]);
        }

        // D^{a-i} T(tau) = D^{a-i} P + I^i [G] + D^{a-i} X
        let g: Vec<T> = rhs.iter().zip(&y).map(|(&r, &yv)| r - ode.b * yv).collect();
        let tau = grid[last];
        psi = (1..=l)
            .map(|i| {
                let nu = T::from_usize_lossy(i) - alpha;
                let hist: T = int_w[i - 1].iter().zip(&g).map(|(&w, &gv)| w * gv).sum();
                p_sum.integrate(nu).eval(tau) + hist + x_sum.integrate(nu).eval(tau)
            })
            .collect();
        prev_p = p_sum;
        prev_y = y;
    }
    if values.first().is_some_and(|v| !v.is_finite()) {
        nodes.remove(0);
        values.remove(0);
    }
    SampledFn::new(nodes, values)
}

/// `(1/Gamma(a)) int_tau^t (t - u)^{a-1} u^p du` by Gauss-Jacobi.
fn tail_integral<T: Real>(alpha: T, p: T, tau: T, t: T) -> T {
    let rule = gauss_jacobi(24, alpha.as_f64() - 1.0, 0.0);
    let half = (t - tau) / T::lit(2.0);
    let mid = (t + tau) / T::lit(2.0);
    let mut acc = T::zero();
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let u = mid + half * T::lit(x);
        acc += T::lit(w) * u.powf(p);
    }
    acc * half.powf(alpha) * rgamma(alpha)
}

fn full_solve<T: Real>(ode: &ModeOde<T>, data: &ModeData<T>, cfg: &OracleConfig<T>) -> Result<SampledFn<T>> {
    let alpha = ode.alpha;
    let steps = (ode.tau / cfg.h).round().to_usize().unwrap_or(64);
    let count = ((ode.horizon / ode.tau) - T::lit(1e-12)).ceil().to_usize().unwrap_or(1).max(1);
    let local = local_grid(cfg.h, steps, cfg.graded_steps, ode.tau);
    let per = local.len() - 1;
    let mut times = vec![T::zero()];
    for n in 0..count {
        let start = ode.tau * T::from_usize_lossy(n);
        times.extend(local[1..].iter().map(|&s| start + s));
    }
    let st = build_weights(&times, alpha, cfg.corrector == Corrector::Pece);
    let h0 = cauchy_sum(alpha, &data.cauchy);
    let (pre_exact, pre_fn) = prehistory_split(&data.prehistory)?;

    let ih0 = h0.integrate(alpha);
    let shifted = h0.integrate(alpha);
    let exact: Vec<T> = times
        .iter()
        .map(|&t| {
            let mut v = -ode.b * ih0.eval(t);
            // prehistory part lives on [0, tau]
            for &(c, p) in &pre_exact.terms {
                let full = PowerSum { terms: vec![(c, p)] }.integrate(alpha).eval(t);
                let cut = if t > ode.tau {
                    c * rgamma(p + T::one()) * tail_integral(alpha, p, ode.tau, t)
                } else {
                    T::zero()
                };
                v -= ode.c * (full - cut);
            }
            if t > ode.tau {
                v -= ode.c * shifted.eval(t - ode.tau);
            }
            v
        })
        .collect();

    let n = times.len();
    let mut y = vec![T::zero(); n];
    let mut g = vec![T::zero(); n];
    let force = |t: T| data.forcing.as_ref().map_or(T::zero(), |f| f(t));
    let delayed = |j: usize, y: &[T]| -> Result<T> {
        if j <= per {
            if pre_fn {
                data.prehistory.value(ode.tau, times[j] - ode.tau)
            } else {
                Ok(T::zero())
            }
        } else {
            Ok(y[j - per])
        }
    };
    y[0] = exact[0];
    g[0] = force(times[0]) - ode.c * delayed(0, &y)? - ode.b * y[0];
    for j in 1..n {
        let rhs = force(times[j]) - ode.c * delayed(j, &y)?;
        let w = &st.trap[j];
        let hist: T = (0..j).map(|k| w[k] * g[k]).sum();
        let yj = match cfg.corrector {
            Corrector::Implicit => (hist + w[j] * rhs + exact[j]) / (T::one() + ode.b * w[j]),
            Corrector::Pece => {
                let pred: T = (0..j).map(|k| st.rect[j][k] * g[k]).sum::<T>() + exact[j];
                hist + w[j] * (rhs - ode.b * pred) + exact[j]
            }
        };
        y[j] = check(yj, times[j])?;
        g[j] = rhs - ode.b * y[j];
    }
    let mut nodes = Vec::with_capacity(n);
    let mut values = Vec::with_capacity(n);
    for j in 0..n {
        if times[j] > ode.horizon * (T::one() + T::lit(1e-12)) {
            break;
        }
        let v = h0.eval(times[j]) + y[j];
        if j == 0 && !v.is_finite() {
            continue;
        }
        nodes.push(times[j]);
        values.push(v);
    }
    SampledFn::new(nodes, values)
}
