//! Run configuration: TOML parsing and validation with field paths.

use fracdelay::basis::{phi_exponent, AxisSpec, BoxSpec};
use fracdelay::projection::min_axis_points;
use fracdelay::stepper::Multiplier;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration:\n  {}", .0.join("\n  "))]
    Validation(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AxisConfig {
    Nonlocal { alpha: f64, beta: f64, s: f64 },
    Periodic { s: f64 },
    Dirichlet { s: f64 },
}

impl AxisConfig {
    fn s(&self) -> f64 {
        match *self {
            Self::Nonlocal { s, .. } | Self::Periodic { s } | Self::Dirichlet { s } => s,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Self::Nonlocal { .. } => 0,
            Self::Periodic { .. } => 1,
            Self::Dirichlet { .. } => 2,
        }
    }

    fn admits(&self, m: i64) -> bool {
        !matches!(self, Self::Dirichlet { .. }) || m >= 1
    }
}

fn one() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeCoeff {
    pub mode: Vec<i64>,
    #[serde(default)]
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

/// Spatial factor of a data term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "preset", rename_all = "snake_case", deny_unknown_fields)]
pub enum Spatial {
    Zero,
    /// `amplitude * v_m(x)`, L2-normalized eigenfunction.
    Eigenmode {
        mode: Vec<i64>,
        #[serde(default = "one")]
        amplitude: f64,
    },
    /// `amplitude * prod_j sin(k_j x_j)`
    SineProduct {
        k: Vec<f64>,
        #[serde(default = "one")]
        amplitude: f64,
    },
    /// Explicit expansion coefficients.
    Modes { coefficients: Vec<ModeCoeff> },
    /// Real samples on the uniform grid of `shape` over `[0, pi]^N`, last axis fastest.
    Grid { shape: Vec<usize>, values: Vec<f64> },
}

/// Time factor of a forcing term.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Temporal {
    Constant { value: f64 },
    /// `sum coeffs[k] t^k`
    Polynomial { coeffs: Vec<f64> },
    /// `amplitude * exp(rate t)`
    Exponential { amplitude: f64, rate: f64 },
    /// `amplitude * sin(omega t + phase)`
    Sine {
        amplitude: f64,
        omega: f64,
        #[serde(default)]
        phase: f64,
    },
}

impl Temporal {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Self::Constant { value } => *value,
            Self::Polynomial { coeffs } => coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c),
            Self::Exponential { amplitude, rate } => amplitude * (rate * t).exp(),
            Self::Sine { amplitude, omega, phase } => amplitude * (omega * t + phase).sin(),
        }
    }

    fn params(&self) -> Vec<f64> {
        match self {
            Self::Constant { value } => vec![*value],
            Self::Polynomial { coeffs } => coeffs.clone(),
            Self::Exponential { amplitude, rate } => vec![*amplitude, *rate],
            Self::Sine { amplitude, omega, phase } => vec![*amplitude, *omega, *phase],
        }
    }
}

/// Prehistory term: the trace `D^{alpha-l} u` on `(-tau, 0)` equals
/// `spatial(x) * sum trace[k] (t + tau)^k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrehistoryTerm {
    pub spatial: Spatial,
    pub trace: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ForcingTerm {
    pub spatial: Spatial,
    pub temporal: Temporal,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Data {
    /// Entry `i - 1` is `D^{alpha-i} u` at `t = 0` as a sum of spatial terms.
    #[serde(default)]
    pub initial: Vec<Vec<Spatial>>,
    #[serde(default)]
    pub prehistory: Vec<PrehistoryTerm>,
    #[serde(default)]
    pub forcing: Vec<ForcingTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Numerics {
    /// Truncation radius `M`.
    pub modes: usize,
    /// Projection grid points per axis.
    pub projection_grid: Vec<usize>,
    /// Output grid points per axis.
    pub output_grid: Vec<usize>,
    /// Output times, uniform on `[0, T]`.
    pub times: usize,
    /// Residual sample times per delay interval.
    pub residual_samples: usize,
    /// Gauss-Jacobi nodes of the stepper's singular panels.
    pub quadrature_nodes: usize,
    pub oracle: bool,
    /// Oracle steps per delay interval.
    pub oracle_steps: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Output {
    pub dir: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Problem {
    pub alpha: f64,
    pub tau: f64,
    pub horizon: f64,
    pub axes: Vec<AxisConfig>,
    pub b: Multiplier<f64>,
    pub c: Multiplier<f64>,
}

/// Validated configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub problem: Problem,
    pub data: Data,
    pub numerics: Numerics,
    pub output: Output,
    /// Non-fatal findings, e.g. the embedding threshold.
    pub warnings: Vec<String>,
}

impl RunConfig {
    pub fn box_spec(&self) -> BoxSpec<f64> {
        let axes = self
            .problem
            .axes
            .iter()
            .map(|a| match *a {
                AxisConfig::Nonlocal { alpha, beta, s } => AxisSpec::nonlocal(alpha, beta, s).expect("validated"),
                AxisConfig::Periodic { s } => AxisSpec::periodic(s),
                AxisConfig::Dirichlet { s } => AxisSpec::dirichlet(s),
            })
            .collect();
        BoxSpec::new(axes).expect("validated")
    }

    /// Number of initial values `l`.
    pub fn initial_count(&self) -> usize {
        self.problem.alpha.ceil() as usize
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    alpha: Option<f64>,
    tau: Option<f64>,
    horizon: Option<f64>,
    #[serde(default)]
    axes: Vec<AxisConfig>,
    b: Option<Multiplier<f64>>,
    c: Option<Multiplier<f64>>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawNumerics {
    modes: Option<usize>,
    projection_grid: Option<Vec<usize>>,
    output_grid: Option<Vec<usize>>,
    times: Option<usize>,
    residual_samples: Option<usize>,
    quadrature_nodes: Option<usize>,
    oracle: Option<bool>,
    oracle_steps: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    dir: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    problem: Option<RawProblem>,
    #[serde(default)]
    data: Data,
    #[serde(default)]
    numerics: RawNumerics,
    output: Option<RawOutput>,
}

const DEFAULT_MODES: usize = 8;

struct Checker {
    errors: Vec<String>,
}

impl Checker {
    fn fail(&mut self, path: impl AsRef<str>, msg: impl AsRef<str>) {
        self.errors.push(format!("{}: {}", path.as_ref(), msg.as_ref()));
    }

    fn finite(&mut self, path: &str, v: f64) {
        if !v.is_finite() {
            self.fail(path, "must be finite");
        }
    }

    fn positive(&mut self, path: &str, v: Option<f64>) -> f64 {
        match v {
            None => {
                self.fail(path, "required");
                f64::NAN
            }
            Some(x) if !(x > 0.0 && x.is_finite()) => {
                self.fail(path, format!("must be positive and finite, got {x}"));
                x
            }
            Some(x) => x,
        }
    }

    fn multiplier(&mut self, path: &str, m: &Multiplier<f64>) {
        match m {
            Multiplier::ScaledEigenvalue { c } => self.finite(&format!("{path}.c"), *c),
            Multiplier::Power { c, sigma } => {
                self.finite(&format!("{path}.c"), *c);
                self.finite(&format!("{path}.sigma"), *sigma);
            }
            Multiplier::Polynomial { coeffs } => {
                for (k, c) in coeffs.iter().enumerate() {
                    self.finite(&format!("{path}.coeffs[{k}]"), *c);
                }
            }
        }
    }

    fn mode(&mut self, path: &str, axes: &[AxisConfig], mode: &[i64]) {
        if mode.len() != axes.len() {
            self.fail(path, format!("has {} indices, the box has {} axes", mode.len(), axes.len()));
            return;
        }
        for (j, (a, &m)) in axes.iter().zip(mode).enumerate() {
            if !a.admits(m) {
                self.fail(format!("{path}[{j}]"), format!("index {m} outside the axis index domain (Dirichlet axes need m >= 1)"));
            }
        }
    }

    fn spatial(&mut self, path: &str, axes: &[AxisConfig], sp: &Spatial, radius: usize) {
        let n = axes.len();
        match sp {
            Spatial::Zero => {}
            Spatial::Eigenmode { mode, amplitude } => {
                self.mode(&format!("{path}.mode"), axes, mode);
                self.finite(&format!("{path}.amplitude"), *amplitude);
            }
            Spatial::SineProduct { k, amplitude } => {
                if k.len() != n {
                    self.fail(format!("{path}.k"), format!("has {} entries, the box has {n} axes", k.len()));
                }
                for (j, v) in k.iter().enumerate() {
                    self.finite(&format!("{path}.k[{j}]"), *v);
                }
                self.finite(&format!("{path}.amplitude"), *amplitude);
            }
            Spatial::Modes { coefficients } => {
                for (i, c) in coefficients.iter().enumerate() {
                    self.mode(&format!("{path}.coefficients[{i}].mode"), axes, &c.mode);
                    self.finite(&format!("{path}.coefficients[{i}].re"), c.re);
                    self.finite(&format!("{path}.coefficients[{i}].im"), c.im);
                }
            }
            Spatial::Grid { shape, values } => {
                if shape.len() != n {
                    self.fail(format!("{path}.shape"), format!("has {} entries, the box has {n} axes", shape.len()));
                }
                let need = min_axis_points(radius);
                for (j, &p) in shape.iter().enumerate() {
                    if p < need {
                        self.fail(format!("{path}.shape[{j}]"), format!("{p} points cannot resolve radius {radius}; at least {need} needed"));
                    }
                }
                let total: usize = shape.iter().product();
                if values.len() != total {
                    self.fail(format!("{path}.values"), format!("has {} samples, shape needs {total}", values.len()));
                }
                if values.iter().any(|v| !v.is_finite()) {
                    self.fail(format!("{path}.values"), "must be finite");
                }
            }
        }
    }
}

/// Parses and validates a TOML run configuration, reporting every violation.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
    let mut ck = Checker { errors: Vec::new() };
    let mut warnings = Vec::new();

    let Some(p) = raw.problem else {
        return Err(ConfigError::Validation(vec!["problem: required section".into()]));
    };
    let alpha = match p.alpha {
        None => {
            ck.fail("problem.alpha", "required");
            f64::NAN
        }
        Some(a) if !(a > 0.0 && a <= 2.0) => {
            ck.fail("problem.alpha", format!("must lie in (0, 2], got {a}"));
            a
        }
        Some(a) => a,
    };
    let tau = ck.positive("problem.tau", p.tau);
    let horizon = ck.positive("problem.horizon", p.horizon);
    if p.axes.is_empty() {
        ck.fail("problem.axes", "at least one axis required");
    }
    for (j, w) in p.axes.windows(2).enumerate() {
        if w[0].rank() > w[1].rank() {
            ck.fail(format!("problem.axes[{}]", j + 1), "axes must be ordered nonlocal, then periodic, then dirichlet");
        }
    }
    let dim = p.axes.len();
    let threshold = 2.0 + dim as f64 / 2.0;
    for (j, a) in p.axes.iter().enumerate() {
        let path = format!("problem.axes[{j}]");
        let s = a.s();
        if !(s >= 0.0 && s.is_finite()) {
            ck.fail(format!("{path}.s"), format!("must be finite and >= 0, got {s}"));
        } else if !(s > threshold) {
            warnings.push(format!("{path}.s = {s} does not exceed 2 + N/2 = {threshold}"));
        }
        if let AxisConfig::Nonlocal { alpha: a, beta: b, .. } = *a {
            if a.abs() == b.abs() {
                ck.fail(&path, format!("|alpha| = |beta| = {} forbidden: the eigenfunction basis needs |alpha_j| != |beta_j|", a.abs()));
            } else if phi_exponent(a, b).is_err() {
                ck.fail(&path, format!("alpha = {a}, beta = {b} must be non-zero and finite"));
            }
        }
    }
    let b = p.b.unwrap_or(Multiplier::ScaledEigenvalue { c: 1.0 });
    let c = p.c.unwrap_or_else(Multiplier::zero);
    ck.multiplier("problem.b", &b);
    ck.multiplier("problem.c", &c);

    let n = raw.numerics;
    let modes = n.modes.unwrap_or(DEFAULT_MODES);
    let need = min_axis_points(modes);
    let per_axis = |v: Option<Vec<usize>>, default: usize| v.unwrap_or_else(|| vec![default; dim]);
    let projection_grid = per_axis(n.projection_grid, (8 * modes + 1).max(129));
    let output_grid = per_axis(n.output_grid, 33);
    for (name, g) in [("projection_grid", &projection_grid), ("output_grid", &output_grid)] {
        if g.len() != dim {
            ck.fail(format!("numerics.{name}"), format!("has {} entries, the box has {dim} axes", g.len()));
        }
    }
    for (j, &pts) in projection_grid.iter().enumerate() {
        if pts < need {
            ck.fail(format!("numerics.projection_grid[{j}]"), format!("{pts} points cannot resolve radius {modes}; at least {need} needed"));
        }
    }
    for (j, &pts) in output_grid.iter().enumerate() {
        if pts == 0 {
            ck.fail(format!("numerics.output_grid[{j}]"), "must be at least 1");
        }
    }
    let times = n.times.unwrap_or(21);
    if times == 0 {
        ck.fail("numerics.times", "must be at least 1");
    }
    let oracle_steps = n.oracle_steps.unwrap_or(256);
    if oracle_steps < 64 {
        ck.fail("numerics.oracle_steps", format!("must be at least 64, got {oracle_steps}"));
    }
    let quadrature_nodes = n.quadrature_nodes.unwrap_or(16);
    if !(4..=64).contains(&quadrature_nodes) {
        ck.fail("numerics.quadrature_nodes", format!("must lie in [4, 64], got {quadrature_nodes}"));
    }
    let numerics = Numerics {
        modes,
        projection_grid,
        output_grid,
        times,
        residual_samples: n.residual_samples.unwrap_or(4),
        quadrature_nodes,
        oracle: n.oracle.unwrap_or(false),
        oracle_steps,
    };

    let data = raw.data;
    let l = if alpha.is_finite() { alpha.ceil() as usize } else { 0 };
    if !data.initial.is_empty() && data.initial.len() != l {
        ck.fail("data.initial", format!("needs {l} entries (one per initial value) for alpha = {alpha}, got {}", data.initial.len()));
    }
    if ck.errors.is_empty() {
        for (i, terms) in data.initial.iter().enumerate() {
            for (k, sp) in terms.iter().enumerate() {
                ck.spatial(&format!("data.initial[{i}][{k}]"), &p.axes, sp, modes);
            }
        }
        for (k, t) in data.prehistory.iter().enumerate() {
            ck.spatial(&format!("data.prehistory[{k}].spatial"), &p.axes, &t.spatial, modes);
            for (i, v) in t.trace.iter().enumerate() {
                ck.finite(&format!("data.prehistory[{k}].trace[{i}]"), *v);
            }
        }
        for (k, f) in data.forcing.iter().enumerate() {
            ck.spatial(&format!("data.forcing[{k}].spatial"), &p.axes, &f.spatial, modes);
            if f.temporal.params().iter().any(|v| !v.is_finite()) {
                ck.fail(format!("data.forcing[{k}].temporal"), "parameters must be finite");
            }
        }
    }
    if !ck.errors.is_empty() {
        return Err(ConfigError::Validation(ck.errors));
    }
    Ok(RunConfig {
        problem: Problem {
            alpha,
            tau,
            horizon,
            axes: p.axes,
            b,
            c,
        },
        data,
        numerics,
        output: Output {
            dir: raw.output.and_then(|o| o.dir).unwrap_or_else(|| ".".into()),
        },
        warnings,
    })
}
