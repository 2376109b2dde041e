//! Eigenpairs of `-Laplace` on `(0, pi)^N` with nonlocal, periodic and
//! Dirichlet axes, and the Riesz-basis criterion for the nonlocal ones.

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::real::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AxisKind<T> {
    /// `a v(0) + b v(pi) = 0`, `b v'(0) + a v'(pi) = 0`.
    Nonlocal { alpha: T, beta: T },
    Periodic,
    Dirichlet,
}

impl<T> AxisKind<T> {
    fn rank(&self) -> u8 {
        match self {
            AxisKind::Nonlocal { .. } => 0,
            AxisKind::Periodic => 1,
            AxisKind::Dirichlet => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AxisKind::Nonlocal { .. } => "nonlocal",
            AxisKind::Periodic => "periodic",
            AxisKind::Dirichlet => "dirichlet",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec<T> {
    pub kind: AxisKind<T>,
    /// Sobolev exponent `s_j >= 0`.
    pub s: T,
}

impl<T: Real> AxisSpec<T> {
    pub fn nonlocal(alpha: T, beta: T, s: T) -> Result<Self> {
        phi_exponent(alpha, beta)?;
        Ok(Self {
            kind: AxisKind::Nonlocal { alpha, beta },
            s,
        })
    }

    pub fn periodic(s: T) -> Self {
        Self {
            kind: AxisKind::Periodic,
            s,
        }
    }

    pub fn dirichlet(s: T) -> Self {
        Self {
            kind: AxisKind::Dirichlet,
            s,
        }
    }

    /// Whether `m` lies in this axis' index domain.
    pub fn admits(&self, m: i64) -> bool {
        !matches!(self.kind, AxisKind::Dirichlet) || m >= 1
    }
}

/// Ordered list of axes: nonlocal first, then periodic, then Dirichlet.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxSpec<T> {
    axes: Vec<AxisSpec<T>>,
}

impl<T: Real> BoxSpec<T> {
    pub fn new(axes: Vec<AxisSpec<T>>) -> Result<Self> {
        if axes.is_empty() {
            return Err(Error::InvalidParameter("at least one axis required".into()));
        }
        if axes.windows(2).any(|w| w[0].kind.rank() > w[1].kind.rank()) {
            return Err(Error::InvalidParameter(
                "axes must be ordered nonlocal, then periodic, then dirichlet".into(),
            ));
        }
        for a in &axes {
            if !(a.s >= T::zero()) {
                return Err(Error::InvalidParameter(format!(
                    "Sobolev exponent must be >= 0, got {}",
                    a.s
                )));
            }
            if let AxisKind::Nonlocal { alpha, beta } = a.kind {
                phi_exponent(alpha, beta)?;
            }
        }
        Ok(Self { axes })
    }

    pub fn axes(&self) -> &[AxisSpec<T>] {
        &self.axes
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn has_periodic(&self) -> bool {
        self.axes.iter().any(|a| a.kind == AxisKind::Periodic)
    }

    /// All modes with `|m_j| <= radius` on integer axes and `1 <= m_j <= radius`
    /// on Dirichlet axes, in lexicographic order.
    pub fn mode_box(&self, radius: usize) -> Vec<ModeIndex> {
        let r = radius as i64;
        let ranges: Vec<(i64, i64)> = self
            .axes
            .iter()
            .map(|a| match a.kind {
                AxisKind::Dirichlet => (1, r),
                _ => (-r, r),
            })
            .collect();
        if ranges.iter().any(|(lo, hi)| lo > hi) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur: Vec<i64> = ranges.iter().map(|r| r.0).collect();
        loop {
            out.push(ModeIndex(cur.clone()));
            let mut k = cur.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < ranges[k].1 {
                    cur[k] += 1;
                    for (j, c) in cur.iter_mut().enumerate().skip(k + 1) {
                        *c = ranges[j].0;
                    }
                    break;
                }
            }
        }
    }
}

/// Multi-index `(m_1, ..., m_N)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ModeIndex(pub Vec<i64>);

impl ModeIndex {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for ModeIndex {
    fn from(v: Vec<i64>) -> Self {
        ModeIndex(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenData<T> {
    /// Shift exponents, one per nonlocal axis.
    pub phi: Vec<T>,
    pub lambda: Vec<T>,
    pub mu: T,
    /// Product of the per-axis L2 normalization constants.
    pub l2_norm_const: T,
    /// `prod_k (1 + |lambda_k|^{2 s_k})`.
    pub sobolev_weight: T,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    L2,
    Sobolev,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RieszReport<T> {
    pub theta: Vec<T>,
    pub rho: T,
    pub satisfied: bool,
}

/// `phi = arccos(-2ab / (a^2 + b^2)) / pi`, strictly inside `(0, 1)`.
pub fn phi_exponent<T: Real>(alpha: T, beta: T) -> Result<T> {
    if alpha == T::zero()
        || beta == T::zero()
        || alpha.abs() == beta.abs()
        || !alpha.is_finite()
        || !beta.is_finite()
    {
        return Err(Error::DegenerateAxis {
            alpha: alpha.as_f64(),
            beta: beta.as_f64(),
        });
    }
    let c = -T::lit(2.0) * alpha * beta / (alpha * alpha + beta * beta);
    Ok(c.max(-T::one()).min(T::one()).acos() / T::PI())
}

pub fn axis_lambda<T: Real>(axis: &AxisSpec<T>, m: i64) -> Result<T> {
    let mf = T::lit(m as f64);
    match axis.kind {
        AxisKind::Nonlocal { alpha, beta } => {
            Ok(T::lit(2.0) * mf + phi_exponent(alpha, beta)?)
        }
        AxisKind::Periodic => Ok(T::lit(2.0) * mf),
        AxisKind::Dirichlet => {
            if m < 1 {
                return Err(Error::IndexDomain { axis: 0, m });
            }
            Ok(mf)
        }
    }
}

fn check_mode<T: Real>(spec: &BoxSpec<T>, m: &ModeIndex) -> Result<()> {
    if m.0.len() != spec.dim() {
        return Err(Error::InvalidParameter(format!(
            "mode has {} components, box has {} axes",
            m.0.len(),
            spec.dim()
        )));
    }
    for (j, (a, &mj)) in spec.axes.iter().zip(&m.0).enumerate() {
        if !a.admits(mj) {
            return Err(Error::IndexDomain { axis: j, m: mj });
        }
    }
    Ok(())
}

pub fn mode_mu<T: Real>(spec: &BoxSpec<T>, m: &ModeIndex) -> Result<T> {
    Ok(eigen_data(spec, m)?.mu)
}

fn axis_norm<T: Real>(axis: &AxisSpec<T>) -> T {
    let two_over_pi = (T::lit(2.0) / T::PI()).sqrt();
    match axis.kind {
        AxisKind::Nonlocal { alpha, beta } => two_over_pi / (alpha * alpha + beta * beta).sqrt(),
        AxisKind::Periodic => T::one() / T::PI().sqrt(),
        AxisKind::Dirichlet => two_over_pi,
    }
}

fn sobolev_factor<T: Real>(lambda: T, s: T) -> T {
    T::one() + lambda.abs().powf(T::lit(2.0) * s)
}

pub fn eigen_data<T: Real>(spec: &BoxSpec<T>, m: &ModeIndex) -> Result<EigenData<T>> {
    check_mode(spec, m)?;
    let mut phi = Vec::new();
    let mut lambda = Vec::with_capacity(spec.dim());
    let mut norm = T::one();
    let mut weight = T::one();
    for (a, &mj) in spec.axes.iter().zip(&m.0) {
        if let AxisKind::Nonlocal { alpha, beta } = a.kind {
            phi.push(phi_exponent(alpha, beta)?);
        }
        let l = axis_lambda(a, mj)?;
        lambda.push(l);
        norm *= axis_norm(a);
        weight *= sobolev_factor(l, a.s);
    }
    let mu = lambda.iter().map(|&l| l * l).sum();
    Ok(EigenData {
        phi,
        lambda,
        mu,
        l2_norm_const: norm,
        sobolev_weight: weight,
    })
}

/// `d^deriv/dx^deriv` of the L2-normalized factor of one axis.
pub fn axis_factor<T: Real>(axis: &AxisSpec<T>, lambda: T, x: T, deriv: usize) -> Complex<T> {
    let n = axis_norm(axis);
    let lx = lambda * x;
    let lp = lambda.powi(deriv as i32);
    // d^k sin = sin(. + k pi/2), d^k cos = cos(. + k pi/2)
    let shift = T::FRAC_PI_2() * T::from_usize_lossy(deriv % 4);
    match axis.kind {
        AxisKind::Nonlocal { alpha, beta } => {
            let sg = if beta * beta > alpha * alpha { T::one() } else { -T::one() };
            let v = sg * alpha * (lx + shift).sin() + beta * (lx + shift).cos();
            Complex::new(n * lp * v, T::zero())
        }
        AxisKind::Periodic => {
            // (i lambda)^k e^{i lambda x}
            let ik = Complex::new(T::zero(), T::one()).powi(deriv as i32);
            Complex::from_polar(n * lp, lx) * ik
        }
        AxisKind::Dirichlet => Complex::new(n * lp * (lx + shift).sin(), T::zero()),
    }
}

pub fn eigenfunction_eval<T: Real>(
    spec: &BoxSpec<T>,
    m: &ModeIndex,
    x: &[T],
    normalization: Normalization,
) -> Result<Complex<T>> {
    let ed = eigen_data(spec, m)?;
    if x.len() != spec.dim() {
        return Err(Error::InvalidParameter(format!(
            "point has {} coordinates, box has {} axes",
            x.len(),
            spec.dim()
        )));
    }
    let mut v = Complex::new(T::one(), T::zero());
    for ((a, &l), &xj) in spec.axes.iter().zip(&ed.lambda).zip(x) {
        v = v * axis_factor(a, l, xj, 0);
    }
    if normalization == Normalization::Sobolev {
        v = v / ed.sobolev_weight.sqrt();
    }
    Ok(v)
}

/// Checks conditions (value and first derivative) of every axis for this mode's
/// factors with the given eigenvalues.
pub fn verify_boundary_with<T: Real>(spec: &BoxSpec<T>, lambda: &[T], tol: T) -> bool {
    let pi = T::PI();
    spec.axes.iter().zip(lambda).all(|(a, &l)| {
        let f = |x, d| axis_factor(a, l, x, d);
        let scale = axis_norm(a) * (T::one() + l.abs());
        let ok = |c: Complex<T>| c.norm() <= tol * scale;
        match a.kind {
            AxisKind::Nonlocal { alpha, beta } => {
                ok(f(T::zero(), 0) * alpha + f(pi, 0) * beta)
                    && ok(f(T::zero(), 1) * beta + f(pi, 1) * alpha)
            }
            AxisKind::Periodic => ok(f(T::zero(), 0) - f(pi, 0)) && ok(f(T::zero(), 1) - f(pi, 1)),
            AxisKind::Dirichlet => ok(f(T::zero(), 0)) && ok(f(pi, 0)),
        }
    })
}

pub fn verify_boundary_conditions<T: Real>(spec: &BoxSpec<T>, m: &ModeIndex, tol: T) -> bool {
    match eigen_data(spec, m) {
        Ok(ed) => verify_boundary_with(spec, &ed.lambda, tol),
        Err(_) => false,
    }
}

/// `(theta, rho)` of one nonlocal axis with shift exponent `phi` and smoothness `s`.
pub fn riesz_rho<T: Real>(phi: T, s: T) -> (T, T) {
    let two = T::lit(2.0);
    // max over [0, pi] of |e^{i phi x} - 1| = 2 sin(phi pi / 2) for phi in (0, 1)
    let theta = two * two.sqrt() * (phi * T::PI() / two).sin();
    let sigma = if s > T::zero() { T::one() } else { T::FRAC_1_SQRT_2() };
    let inner = theta / two.sqrt() + (phi + T::one()).powf(s) - T::one();
    (theta, (theta * theta + two * inner * inner * sigma).sqrt())
}

pub fn riesz_criterion<T: Real>(spec: &BoxSpec<T>) -> Result<RieszReport<T>> {
    let mut theta = Vec::new();
    let mut rho = T::zero();
    for a in &spec.axes {
        if let AxisKind::Nonlocal { alpha, beta } = a.kind {
            let (th, r) = riesz_rho(phi_exponent(alpha, beta)?, a.s);
            rho = rho.max(r);
            theta.push(th);
        }
    }
    Ok(RieszReport {
        theta,
        rho,
        satisfied: rho < T::one(),
    })
}
