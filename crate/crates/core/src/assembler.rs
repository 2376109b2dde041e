//! Series assembly on tensor grids, existence-condition sums and the
//! spectral residual of the full equation.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{axis_factor, axis_lambda, AxisKind, AxisSpec, BoxSpec, ModeIndex};
use crate::error::{Error, Result};
use crate::projection::{contract_all, mode_weight, WeightMode};
use crate::quadrature::gauss_jacobi;
use crate::real::Real;
use crate::stepper::ModeTrajectory;

/// Relative change of the last doubling below which a weighted sum is taken as
/// convergent.
pub const TAIL_TOLERANCE: f64 = 0.01;

/// Real and imaginary parts of one mode coefficient `T_m(t)`.
#[derive(Debug, Clone)]
pub struct ModeSolution<T> {
    pub mode: ModeIndex,
    pub re: ModeTrajectory<T>,
    /// `None` when the imaginary part of all data vanishes.
    pub im: Option<ModeTrajectory<T>>,
}

impl<T: Real> ModeSolution<T> {
    pub fn eval(&self, t: T) -> Result<Complex<T>> {
        let re = self.re.eval(t)?;
        let im = match &self.im {
            Some(tr) => tr.eval(t)?,
            None => T::zero(),
        };
        Ok(Complex::new(re, im))
    }

    /// Right-hand side `f_m(t) - C T_m(t - tau)` seen by interval `n` at local time `s`.
    pub fn source(&self, n: usize, s: T) -> Result<Complex<T>> {
        let part = |tr: &ModeTrajectory<T>| -> Result<T> {
            tr.intervals()
                .get(n)
                .ok_or_else(|| Error::InvalidParameter(format!("interval {n} out of range")))?
                .source(s)
        };
        let im = match &self.im {
            Some(tr) => part(tr)?,
            None => T::zero(),
        };
        Ok(Complex::new(part(&self.re)?, im))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TimeDiagnostics<T> {
    pub time: T,
    pub max_abs: T,
    pub max_imag: T,
}

/// `u(x_i, t_k)` on a tensor grid. Values are stored time-major, then by axis
/// in order with the last axis fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionField<T> {
    pub grid: Vec<Vec<T>>,
    pub times: Vec<T>,
    pub values: Vec<Complex<T>>,
    pub diagnostics: Vec<TimeDiagnostics<T>>,
}

impl<T: Real> SolutionField<T> {
    pub fn points_per_time(&self) -> usize {
        self.grid.iter().map(Vec::len).product()
    }

    /// Values at time index `k`.
    pub fn at_time(&self, k: usize) -> &[Complex<T>] {
        let p = self.points_per_time();
        &self.values[k * p..(k + 1) * p]
    }

    /// Coordinates of flat spatial index `i`.
    pub fn point(&self, mut i: usize) -> Vec<T> {
        let mut x = vec![T::zero(); self.grid.len()];
        for j in (0..self.grid.len()).rev() {
            let n = self.grid[j].len();
            x[j] = self.grid[j][i % n];
            i /= n;
        }
        x
    }

    pub fn max_imag(&self) -> T {
        self.diagnostics.iter().fold(T::zero(), |m, d| m.max(d.max_imag))
    }
}

fn check_grid<T: Real>(spec: &BoxSpec<T>, grid: &[Vec<T>]) -> Result<()> {
    if grid.len() != spec.dim() {
        return Err(Error::InvalidParameter(format!(
            "grid has {} axes, box has {}",
            grid.len(),
            spec.dim()
        )));
    }
    for (j, g) in grid.iter().enumerate() {
        if g.is_empty() {
            return Err(Error::InvalidParameter(format!("grid axis {j} is empty")));
        }
        if let Some(&x) = g.iter().find(|&&x| !(x >= T::zero() && x <= T::PI())) {
            return Err(Error::Domain {
                t: x.as_f64(),
                lo: 0.0,
                hi: std::f64::consts::PI,
            });
        }
    }
    Ok(())
}

/// Truncated series `sum_m T_m(t) v_m(x)` on `grid` at every time in `times`.
pub fn assemble<T: Real>(
    modes: &[ModeSolution<T>],
    spec: &BoxSpec<T>,
    grid: &[Vec<T>],
    times: &[T],
) -> Result<SolutionField<T>> {
    check_grid(spec, grid)?;
    let dim = spec.dim();
    // per-axis sorted index lists covering every mode present
    let per_axis: Vec<Vec<i64>> = (0..dim)
        .map(|j| {
            let set: BTreeSet<i64> = modes.iter().map(|m| m.mode.0[j]).collect();
            set.into_iter().collect()
        })
        .collect();
    for m in modes {
        if m.mode.0.len() != dim {
            return Err(Error::InvalidParameter(format!(
                "mode {:?} has the wrong number of indices",
                m.mode.0
            )));
        }
    }
    let mats = (0..dim)
        .map(|j| factor_matrix(&spec.axes()[j], &grid[j], &per_axis[j]))
        .collect::<Result<Vec<_>>>()?;
    let shape: Vec<usize> = per_axis.iter().map(Vec::len).collect();
    let offsets: Vec<usize> = modes
        .iter()
        .map(|m| {
            m.mode.0.iter().enumerate().fold(0usize, |acc, (j, mj)| {
                let pos = per_axis[j].binary_search(mj).expect("index collected above");
                acc * shape[j] + pos
            })
        })
        .collect();
    let points: usize = grid.iter().map(Vec::len).product();

    let slices = times
        .par_iter()
        .map(|&t| -> Result<(Vec<Complex<T>>, TimeDiagnostics<T>)> {
            let values = if modes.is_empty() {
                vec![Complex::zero(); points]
            } else {
                let mut coeffs = vec![Complex::zero(); shape.iter().product()];
                for (m, &off) in modes.iter().zip(&offsets) {
                    coeffs[off] = coeffs[off] + m.eval(t)?;
                }
                contract_all(coeffs, &shape, &mats)
            };
            let diag = TimeDiagnostics {
                time: t,
                max_abs: values.iter().fold(T::zero(), |a, v| a.max(v.norm())),
                max_imag: values.iter().fold(T::zero(), |a, v| a.max(v.im.abs())),
            };
            Ok((values, diag))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut values = Vec::with_capacity(points * times.len());
    let mut diagnostics = Vec::with_capacity(times.len());
    for (v, d) in slices {
        values.extend(v);
        diagnostics.push(d);
    }
    Ok(SolutionField {
        grid: grid.to_vec(),
        times: times.to_vec(),
        values,
        diagnostics,
    })
}

/// Rows: grid points, columns: modes.
fn factor_matrix<T: Real>(axis: &AxisSpec<T>, x: &[T], modes: &[i64]) -> Result<Vec<Vec<Complex<T>>>> {
    let lambdas = modes.iter().map(|&m| axis_lambda(axis, m)).collect::<Result<Vec<_>>>()?;
    Ok(x.iter()
        .map(|&xi| lambdas.iter().map(|&l| axis_factor(axis, l, xi, 0)).collect())
        .collect())
}

/// Upper bound on `sup_x |v_m(x)|` for the L2-normalized eigenfunction, attained
/// once every nonlocal `|lambda|` is at least 2.
pub fn eigenfunction_sup<T: Real>(spec: &BoxSpec<T>, m: &ModeIndex) -> Result<T> {
    let mut sup = T::one();
    for (axis, (a, &mj)) in spec.axes().iter().zip(&m.0).enumerate() {
        if !a.admits(mj) {
            return Err(Error::IndexDomain { axis, m: mj });
        }
        let l = axis_lambda(a, mj)?;
        let at0 = axis_factor(a, l, T::zero(), 0).norm();
        sup *= match a.kind {
            AxisKind::Periodic => at0,
            // A sin + B cos: values a quarter period apart give the amplitude
            _ => at0.hypot(axis_factor(a, l, T::FRAC_PI_2() / l.abs(), 0).norm()),
        };
    }
    Ok(sup)
}

/// Per-mode inputs of the weighted sums: `|phi_{j,m}|^2` for each Cauchy datum
/// and, for each interval, the squared source integral
/// `(int_{n tau}^{t_n} (t_n - xi)^{a-1} |g_m(xi)| d xi)^2` at the interval end.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeMagnitudes<T> {
    pub mode: ModeIndex,
    pub cauchy: Vec<T>,
    pub source: Vec<T>,
}

/// Partial sums of one weighted series over the truncation radii.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartialSums<T> {
    pub label: String,
    pub interval: Option<usize>,
    /// `"s"` for `1 + |lambda|^s`, `"2s"` for `1 + |lambda|^{2s}`.
    pub weight: &'static str,
    pub radii: Vec<usize>,
    pub sums: Vec<T>,
    /// Relative change over the last radius step.
    pub tail_estimate: T,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmbeddingFlag<T> {
    pub axis: usize,
    pub s: T,
    pub threshold: T,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExistenceReport<T> {
    pub sums: Vec<PartialSums<T>>,
    pub embedding: Vec<EmbeddingFlag<T>>,
    pub sums_satisfied: bool,
    pub embedding_satisfied: bool,
}

/// `s_j > 2 + N/2`, strictly.
pub fn embedding_flags<T: Real>(spec: &BoxSpec<T>) -> Vec<EmbeddingFlag<T>> {
    let threshold = T::lit(2.0) + T::from_usize_lossy(spec.dim()) / T::lit(2.0);
    spec.axes()
        .iter()
        .enumerate()
        .map(|(axis, a)| EmbeddingFlag {
            axis,
            s: a.s,
            threshold,
            satisfied: a.s > threshold,
        })
        .collect()
}

fn mode_radius(m: &ModeIndex) -> usize {
    m.0.iter().map(|v| v.unsigned_abs() as usize).max().unwrap_or(0)
}

fn weight_label(w: WeightMode) -> &'static str {
    match w {
        WeightMode::S => "s",
        WeightMode::TwoS => "2s",
    }
}

/// Weighted sums of the Cauchy data and per-interval source integrals at each
/// truncation radius in `radii` (ascending). Both weight variants are reported.
pub fn existence_diagnostics<T: Real>(
    data: &[ModeMagnitudes<T>],
    spec: &BoxSpec<T>,
    radii: &[usize],
) -> Result<ExistenceReport<T>> {
    let mut radii = radii.to_vec();
    radii.sort_unstable();
    radii.dedup();
    let cauchy_count = data.iter().map(|d| d.cauchy.len()).max().unwrap_or(0);
    let interval_count = data.iter().map(|d| d.source.len()).max().unwrap_or(0);

    // (label, interval) -> per-mode magnitudes
    let mut families: Vec<(String, Option<usize>, Vec<(usize, ModeIndex, T)>)> = Vec::new();
    for j in 0..cauchy_count {
        let entries = data
            .iter()
            .map(|d| (mode_radius(&d.mode), d.mode.clone(), d.cauchy.get(j).copied().unwrap_or_else(T::zero)))
            .collect();
        families.push((format!("cauchy_{}", j + 1), None, entries));
    }
    for n in 0..interval_count {
        let entries = data
            .iter()
            .map(|d| (mode_radius(&d.mode), d.mode.clone(), d.source.get(n).copied().unwrap_or_else(T::zero)))
            .collect();
        families.push(("source".to_string(), Some(n), entries));
    }

    let mut sums = Vec::new();
    for (label, interval, entries) in &families {
        for w in [WeightMode::S, WeightMode::TwoS] {
            let weighted = entries
                .iter()
                .map(|(r, m, v)| Ok((*r, *v * mode_weight(spec, m, w)?)))
                .collect::<Result<Vec<_>>>()?;
            let values: Vec<T> = radii
                .iter()
                .map(|&rad| {
                    weighted
                        .iter()
                        .filter(|(r, _)| *r <= rad)
                        .fold(T::zero(), |a, (_, v)| a + *v)
                })
                .collect();
            let tail = match values.len() {
                0 | 1 => T::zero(),
                k => {
                    let (prev, last) = (values[k - 2], values[k - 1]);
                    if last == T::zero() {
                        T::zero()
                    } else {
                        (last - prev) / last
                    }
                }
            };
            sums.push(PartialSums {
                label: label.clone(),
                interval: *interval,
                weight: weight_label(w),
                radii: radii.clone(),
                sums: values,
                tail_estimate: tail,
                satisfied: tail.is_finite() && tail < T::lit(TAIL_TOLERANCE),
            });
        }
    }
    let embedding = embedding_flags(spec);
    Ok(ExistenceReport {
        sums_satisfied: sums.iter().all(|s| s.satisfied),
        embedding_satisfied: embedding.iter().all(|e| e.satisfied),
        sums,
        embedding,
    })
}

/// `int_a^t (t - xi)^{alpha-1} |g(xi)| d xi`, with `g` allowed an integrable
/// singularity `(xi - a)^gamma` at the left end.
pub fn source_integral<T: Real, G>(alpha: T, gamma: T, a: T, t: T, nodes: usize, mut g: G) -> Result<T>
where
    G: FnMut(T) -> Result<T>,
{
    if !(t > a) {
        return Ok(T::zero());
    }
    let gamma = gamma.min(T::zero());
    let rule = gauss_jacobi(nodes, alpha.as_f64() - 1.0, gamma.as_f64());
    let half = T::lit(0.5) * (t - a);
    let scale = half.powf(alpha + gamma);
    let mut acc = T::zero();
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let xi = a + half * (T::one() + T::lit(x));
        let lead = (xi - a).powf(-gamma);
        acc += T::lit(w) * g(xi)?.abs() * lead;
    }
    Ok(acc * scale)
}

/// `|phi_{j,m}|^2` and the squared source integrals of one solved mode.
pub fn mode_magnitudes<T: Real>(sol: &ModeSolution<T>, cauchy: &[Complex<T>]) -> Result<ModeMagnitudes<T>> {
    let intervals = sol.re.intervals();
    let mut source = Vec::with_capacity(intervals.len());
    for (n, iv) in intervals.iter().enumerate() {
        let ctx = iv.context();
        let alpha = ctx.order.alpha();
        let gamma = alpha - T::from_usize_lossy(ctx.order.l());
        let v = source_integral(alpha, gamma, T::zero(), iv.len, 48, |s| {
            Ok(sol.source(n, s)?.norm())
        })?;
        source.push(v * v);
    }
    Ok(ModeMagnitudes {
        mode: sol.mode.clone(),
        cauchy: cauchy.iter().map(|c| c.norm_sqr()).collect(),
        source,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport<T> {
    /// Max over sample times of the sup-weighted residual over the data scale.
    pub relative: T,
    pub absolute: T,
    pub per_time: Vec<(T, T)>,
}

/// Spectral residual of the full equation: at each admissible sample time,
/// `sum_m |r_m(t)| sup|v_m|` over `sum_m scale_m(t) sup|v_m|`. Times inside
/// `(n tau, n tau + tau/100)` are skipped.
pub fn residual_norm<T: Real>(modes: &[ModeSolution<T>], spec: &BoxSpec<T>, times: &[T]) -> Result<ResidualReport<T>> {
    let sups = modes
        .iter()
        .map(|m| eigenfunction_sup(spec, &m.mode))
        .collect::<Result<Vec<_>>>()?;
    let mut per_time = Vec::new();
    let mut relative = T::zero();
    let mut absolute = T::zero();
    for &t in times {
        let Some(first) = modes.first() else {
            per_time.push((t, T::zero()));
            continue;
        };
        let tau = first.re.tau();
        if !(t > T::zero()) || t > first.re.horizon() {
            continue;
        }
        let n = first.re.interval_index(t);
        let s = t - T::from_usize_lossy(n) * tau;
        if s < tau / T::lit(100.0) {
            continue;
        }
        let parts = modes
            .par_iter()
            .zip(&sups)
            .map(|(m, &sup)| -> Result<(T, T)> {
                let re = m.re.residual(n, s)?;
                let (r, sc) = match &m.im {
                    Some(tr) => {
                        let im = tr.residual(n, s)?;
                        (re.residual.hypot(im.residual), re.scale.hypot(im.scale))
                    }
                    None => (re.residual.abs(), re.scale),
                };
                Ok((r * sup, sc * sup))
            })
            .collect::<Result<Vec<_>>>()?;
        let (r, sc) = parts.iter().fold((T::zero(), T::zero()), |(a, b), (r, s)| (a + *r, b + *s));
        let rel = if sc > T::zero() { r / sc } else { r };
        per_time.push((t, rel));
        relative = relative.max(rel);
        absolute = absolute.max(r);
    }
    Ok(ResidualReport {
        relative,
        absolute,
        per_time,
    })
}

/// Coefficients of every mode at time `t`, keyed by index.
pub fn coefficients_at<T: Real>(modes: &[ModeSolution<T>], t: T) -> Result<BTreeMap<ModeIndex, Complex<T>>> {
    modes.iter().map(|m| Ok((m.mode.clone(), m.eval(t)?))).collect()
}
