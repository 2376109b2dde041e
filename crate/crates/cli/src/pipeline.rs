//! project -> solve modes -> assemble -> diagnose.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::Instant;

use anyhow::{Context, Result};
use fracdelay::assembler::{
    assemble, existence_diagnostics, mode_magnitudes, residual_norm, ExistenceReport, ModeSolution, ResidualReport,
    SolutionField,
};
use fracdelay::basis::{eigen_data, riesz_criterion, BoxSpec, ModeIndex, RieszReport};
use fracdelay::fracops::FracOrder;
use fracdelay::oracle::{abm_solve, MemoryPolicy, ModeOde, OracleConfig};
use fracdelay::projection::{axis_nodes, project, project_separable, CoeffSet, GridFn};
use fracdelay::stepper::{ModeData, Prehistory, Stepper, StepperOptions, TimeFn};
use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{RunConfig, Spatial, Temporal};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Compare against the ABM oracle even when the config does not ask for it.
    pub oracle: bool,
    /// Caps the truncation radius.
    pub modes_max: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldSummary {
    pub max_abs: f64,
    pub max_imag: f64,
    pub modes_total: usize,
    /// Modes with non-zero data; the rest vanish identically.
    pub modes_solved: usize,
    pub truncation_radius: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleDelta {
    pub mode: Vec<i64>,
    pub mu: f64,
    pub h: f64,
    /// Max over oracle nodes (first 5% of each interval excluded) of the
    /// difference, relative to the largest closed-form value.
    pub max_relative_delta: Option<f64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Status {
    pub exit_code: i32,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Diagnostics {
    pub status: Status,
    pub warnings: Vec<String>,
    pub riesz: RieszReport<f64>,
    pub existence: ExistenceReport<f64>,
    pub residual: ResidualReport<f64>,
    pub field: FieldSummary,
    pub oracle: Option<Vec<OracleDelta>>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timings {
    pub project_ms: f64,
    pub solve_ms: f64,
    pub assemble_ms: f64,
    pub diagnose_ms: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Provenance {
    pub tool: &'static str,
    pub version: &'static str,
    pub config_path: Option<String>,
    pub config_text: Option<String>,
    pub config: RunConfig,
    pub oracle_flag: bool,
    pub modes_max: Option<usize>,
    pub threads: usize,
    pub timings: Timings,
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub field: SolutionField<f64>,
    pub diagnostics: Diagnostics,
    pub provenance: Provenance,
}

impl RunOutput {
    pub fn exit_code(&self) -> i32 {
        self.diagnostics.status.exit_code
    }
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn spatial_coeffs(spec: &BoxSpec<f64>, sp: &Spatial, radius: usize, grid: &[usize]) -> Result<CoeffSet<f64>> {
    let mut out = CoeffSet::empty(radius);
    match sp {
        Spatial::Zero => {}
        Spatial::Eigenmode { mode, amplitude } => out.insert(ModeIndex(mode.clone()), Complex::new(*amplitude, 0.0)),
        Spatial::SineProduct { k, amplitude } => {
            let factors: Vec<Vec<Complex<f64>>> = k
                .iter()
                .zip(grid)
                .map(|(&kj, &n)| axis_nodes::<f64>(n).iter().map(|&x| Complex::new((kj * x).sin(), 0.0)).collect())
                .collect();
            let c = project_separable(&factors, spec, radius)?;
            for (m, v) in c.iter() {
                out.insert(m.clone(), v * *amplitude);
            }
        }
        Spatial::Modes { coefficients } => {
            for c in coefficients {
                let m = ModeIndex(c.mode.clone());
                let prev = out.get(&m);
                out.insert(m, prev + Complex::new(c.re, c.im));
            }
        }
        Spatial::Grid { shape, values } => {
            let g = GridFn::new(shape.clone(), values.iter().map(|&v| Complex::new(v, 0.0)).collect())?;
            out = project(&g, spec, radius)?;
        }
    }
    Ok(out)
}

/// Projected data: one coefficient set per initial value, prehistory term and forcing term.
struct Projected {
    initial: Vec<CoeffSet<f64>>,
    prehistory: Vec<(CoeffSet<f64>, Vec<f64>)>,
    forcing: Vec<(CoeffSet<f64>, Temporal)>,
}

fn project_data(cfg: &RunConfig, spec: &BoxSpec<f64>, radius: usize) -> Result<Projected> {
    let grid = &cfg.numerics.projection_grid;
    let sum = |terms: &[Spatial], path: String| -> Result<CoeffSet<f64>> {
        let mut acc = CoeffSet::empty(radius);
        for (k, sp) in terms.iter().enumerate() {
            let c = spatial_coeffs(spec, sp, radius, grid).with_context(|| format!("{path}[{k}]"))?;
            acc = acc.axpy(Complex::new(1.0, 0.0), &c);
        }
        Ok(acc)
    };
    let l = cfg.initial_count();
    let initial = (0..l)
        .map(|i| match cfg.data.initial.get(i) {
            Some(terms) => sum(terms, format!("data.initial[{i}]")),
            None => Ok(CoeffSet::empty(radius)),
        })
        .collect::<Result<Vec<_>>>()?;
    let prehistory = cfg
        .data
        .prehistory
        .iter()
        .enumerate()
        .map(|(k, t)| {
            let c = spatial_coeffs(spec, &t.spatial, radius, grid).with_context(|| format!("data.prehistory[{k}]"))?;
            Ok((c, t.trace.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let forcing = cfg
        .data
        .forcing
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let c = spatial_coeffs(spec, &f.spatial, radius, grid).with_context(|| format!("data.forcing[{k}]"))?;
            Ok((c, f.temporal.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Projected {
        initial,
        prehistory,
        forcing,
    })
}

/// Real or imaginary part of one mode's data; `None` when it vanishes.
fn mode_part(p: &Projected, order: FracOrder<f64>, m: &ModeIndex, part: fn(Complex<f64>) -> f64) -> Option<ModeData<f64>> {
    let cauchy: Vec<f64> = p.initial.iter().map(|c| part(c.get(m))).collect();
    let mut monomials: BTreeMap<u64, (f64, f64)> = BTreeMap::new();
    for (c, trace) in &p.prehistory {
        let k = part(c.get(m));
        if k == 0.0 {
            continue;
        }
        for &(pw, coef) in Prehistory::from_trace_polynomial(order, trace).monomials() {
            let e = monomials.entry(pw.to_bits()).or_insert((pw, 0.0));
            e.1 += k * coef;
        }
    }
    let monomials: Vec<(f64, f64)> = monomials.into_values().filter(|(_, c)| *c != 0.0).collect();
    let forcing: Vec<(f64, Temporal)> = p
        .forcing
        .iter()
        .map(|(c, t)| (part(c.get(m)), t.clone()))
        .filter(|(k, _)| *k != 0.0)
        .collect();
    if cauchy.iter().all(|&v| v == 0.0) && monomials.is_empty() && forcing.is_empty() {
        return None;
    }
    let forcing: Option<TimeFn<f64>> = if forcing.is_empty() {
        None
    } else {
        Some(Arc::new(move |t: f64| forcing.iter().map(|(k, g)| k * g.eval(t)).sum()))
    };
    Some(ModeData {
        cauchy,
        prehistory: if monomials.is_empty() {
            Prehistory::Zero
        } else {
            Prehistory::Monomials(monomials)
        },
        forcing,
    })
}

fn uniform(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![b];
    }
    (0..n).map(|k| a + (b - a) * k as f64 / (n - 1) as f64).collect()
}

/// Chebyshev sample times inside every delay interval.
fn residual_times(tau: f64, horizon: f64, per_interval: usize) -> Vec<f64> {
    let mut out = Vec::new();
    let mut start = 0.0;
    while start < horizon {
        let len = tau.min(horizon - start);
        for k in 0..per_interval {
            let x = (std::f64::consts::PI * (k as f64 + 0.5) / per_interval as f64).cos();
            out.push(start + 0.5 * len * (1.0 + x));
        }
        start += tau;
    }
    out.sort_by(f64::total_cmp);
    out
}

fn oracle_deltas(
    cfg: &RunConfig,
    solved: &[(ModeSolution<f64>, ModeData<f64>, f64, f64, f64)],
) -> Vec<OracleDelta> {
    let (tau, horizon, alpha) = (cfg.problem.tau, cfg.problem.horizon, cfg.problem.alpha);
    let h = tau / cfg.numerics.oracle_steps as f64;
    let mut order: Vec<usize> = (0..solved.len()).collect();
    order.sort_by(|&i, &j| solved[i].2.total_cmp(&solved[j].2).then_with(|| solved[i].0.mode.cmp(&solved[j].0.mode)));
    order
        .into_iter()
        .take(4)
        .map(|i| {
            let (sol, data, mu, b, c) = &solved[i];
            let run = || -> fracdelay::Result<f64> {
                let cfg = OracleConfig::new(h, tau)?.with_memory(MemoryPolicy::Restart);
                let o = abm_solve(&ModeOde { alpha, tau, horizon, b: *b, c: *c }, data, &cfg)?;
                let (mut d, mut s) = (0.0f64, 0.0f64);
                for (&t, &v) in o.nodes().iter().zip(o.values()) {
                    if t % tau < 0.05 * tau && t > 0.0 {
                        continue;
                    }
                    let exact = sol.re.eval(t)?;
                    d = d.max((v - exact).abs());
                    s = s.max(exact.abs());
                }
                Ok(if s > 0.0 { d / s } else { d })
            };
            let (max_relative_delta, error) = match run() {
                Ok(v) => (Some(v), None),
                Err(e) => (None, Some(e.to_string())),
            };
            OracleDelta {
                mode: sol.mode.0.clone(),
                mu: *mu,
                h,
                max_relative_delta,
                error,
            }
        })
        .collect()
}

fn radii(radius: usize) -> Vec<usize> {
    let mut r = vec![radius];
    let mut k = radius / 2;
    while k >= 1 && r.len() < 4 {
        r.push(k);
        k /= 2;
    }
    r.reverse();
    r
}

pub fn run(cfg: &RunConfig, opts: RunOptions) -> Result<RunOutput> {
    let spec = cfg.box_spec();
    let radius = opts.modes_max.map_or(cfg.numerics.modes, |m| m.min(cfg.numerics.modes));
    let order = FracOrder::new(cfg.problem.alpha)?;
    let mut timings = Timings::default();

    let t0 = Instant::now();
    let projected = project_data(cfg, &spec, radius)?;
    let mut modes: BTreeSet<ModeIndex> = spec.mode_box(radius).into_iter().collect();
    for c in projected
        .initial
        .iter()
        .chain(projected.prehistory.iter().map(|p| &p.0))
        .chain(projected.forcing.iter().map(|f| &f.0))
    {
        modes.extend(c.iter().map(|(m, _)| m.clone()));
    }
    timings.project_ms = elapsed_ms(t0);

    let t0 = Instant::now();
    let opts_stepper = StepperOptions {
        jacobi_nodes: cfg.numerics.quadrature_nodes,
        ..StepperOptions::default()
    };
    let stepper = Stepper::with_options(cfg.problem.alpha, cfg.problem.tau, cfg.problem.horizon, opts_stepper)?;
    let modes: Vec<ModeIndex> = modes.into_iter().collect();
    let solved = modes
        .par_iter()
        .map(|m| -> Result<Option<_>> {
            let re = mode_part(&projected, order, m, |c| c.re);
            let im = mode_part(&projected, order, m, |c| c.im);
            if re.is_none() && im.is_none() {
                return Ok(None);
            }
            let ctx = || format!("mode {:?}", m.0);
            let mu = eigen_data(&spec, m).with_context(ctx)?.mu;
            let (b, c) = (cfg.problem.b.eval(mu)?, cfg.problem.c.eval(mu)?);
            let re = re.unwrap_or_else(|| ModeData::zero(order.l()));
            let re_tr = stepper.solve(b, c, re.clone()).with_context(ctx)?;
            let im_tr = im.map(|d| stepper.solve(b, c, d)).transpose().with_context(ctx)?;
            let sol = ModeSolution {
                mode: m.clone(),
                re: re_tr,
                im: im_tr,
            };
            Ok(Some((sol, re, mu, b, c)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    timings.solve_ms = elapsed_ms(t0);

    let t0 = Instant::now();
    let grid: Vec<Vec<f64>> = cfg.numerics.output_grid.iter().map(|&n| uniform(0.0, std::f64::consts::PI, n)).collect();
    let times = uniform(0.0, cfg.problem.horizon, cfg.numerics.times);
    let sols: Vec<ModeSolution<f64>> = solved.iter().map(|s| s.0.clone()).collect();
    let field = assemble(&sols, &spec, &grid, &times)?;
    timings.assemble_ms = elapsed_ms(t0);

    let t0 = Instant::now();
    let riesz = riesz_criterion(&spec)?;
    let magnitudes = sols
        .par_iter()
        .map(|s| {
            let cauchy: Vec<Complex<f64>> = projected.initial.iter().map(|c| c.get(&s.mode)).collect();
            mode_magnitudes(s, &cauchy).with_context(|| format!("mode {:?}", s.mode.0))
        })
        .collect::<Result<Vec<_>>>()?;
    let existence = existence_diagnostics(&magnitudes, &spec, &radii(radius))?;
    let rtimes = residual_times(cfg.problem.tau, cfg.problem.horizon, cfg.numerics.residual_samples);
    let residual = residual_norm(&sols, &spec, &rtimes)?;
    let oracle = (opts.oracle || cfg.numerics.oracle).then(|| oracle_deltas(cfg, &solved));
    timings.diagnose_ms = elapsed_ms(t0);

    let mut reasons = Vec::new();
    if !riesz.satisfied {
        reasons.push(format!("basis criterion not met: rho = {} >= 1", riesz.rho));
    }
    for e in existence.embedding.iter().filter(|e| !e.satisfied) {
        reasons.push(format!("axis {}: s = {} does not exceed {}", e.axis, e.s, e.threshold));
    }
    let status = Status {
        exit_code: if reasons.is_empty() { 0 } else { 2 },
        reasons,
    };
    let diagnostics = Diagnostics {
        status,
        warnings: cfg.warnings.clone(),
        riesz,
        existence,
        residual,
        field: FieldSummary {
            max_abs: field.diagnostics.iter().fold(0.0, |m, d| m.max(d.max_abs)),
            max_imag: field.max_imag(),
            modes_total: modes.len(),
            modes_solved: sols.len(),
            truncation_radius: radius,
        },
        oracle,
    };
    let provenance = Provenance {
        tool: "fracdelay",
        version: env!("CARGO_PKG_VERSION"),
        config_path: None,
        config_text: None,
        config: cfg.clone(),
        oracle_flag: opts.oracle,
        modes_max: opts.modes_max,
        threads: rayon::current_num_threads(),
        timings,
    };
    Ok(RunOutput {
        field,
        diagnostics,
        provenance,
    })
}

/// `t, x_1..x_N, re, im` with 17 significant digits.
pub fn solution_csv(field: &SolutionField<f64>) -> String {
    let dim = field.grid.len();
    let mut out = String::from("t");
    for j in 1..=dim {
        out.push_str(&format!(",x{j}"));
    }
    out.push_str(",re,im\n");
    let per = field.points_per_time();
    for (k, &t) in field.times.iter().enumerate() {
        for (i, v) in field.at_time(k).iter().enumerate() {
            out.push_str(&format!("{t:.16e}"));
            for x in field.point(i) {
                out.push_str(&format!(",{x:.16e}"));
            }
            out.push_str(&format!(",{:.16e},{:.16e}\n", v.re, v.im));
        }
        debug_assert_eq!(field.at_time(k).len(), per);
    }
    out
}
