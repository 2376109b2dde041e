//! Fourier coefficients against the eigenbasis by tensor-product Simpson
//! quadrature on uniform grids over `[0, pi]`.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::Zero;

use crate::basis::{axis_factor, eigen_data, eigenfunction_eval, AxisKind, AxisSpec, BoxSpec, ModeIndex, Normalization};
use crate::error::{Error, Result};
use crate::fracops::uniform_nodes;
use crate::real::Real;

pub const MIN_AXIS_POINTS: usize = 8;

/// Complex samples on a uniform tensor grid over `[0, pi]^N` (row-major, axis 0 slowest).
#[derive(Debug, Clone, PartialEq)]
pub struct GridFn<T> {
    shape: Vec<usize>,
    values: Vec<Complex<T>>,
    pub time: Option<T>,
}

impl<T: Real> GridFn<T> {
    pub fn new(shape: Vec<usize>, values: Vec<Complex<T>>) -> Result<Self> {
        if shape.is_empty() || shape.iter().any(|&n| n < MIN_AXIS_POINTS) {
            return Err(Error::InvalidParameter(format!(
                "grid axes need at least {MIN_AXIS_POINTS} points, got {shape:?}"
            )));
        }
        let total: usize = shape.iter().product();
        if total != values.len() {
            return Err(Error::InvalidParameter(format!(
                "grid shape {shape:?} holds {total} values, got {}",
                values.len()
            )));
        }
        Ok(Self {
            shape,
            values,
            time: None,
        })
    }

    /// Samples `f` at the grid points.
    pub fn from_fn<F: FnMut(&[T]) -> Complex<T>>(shape: Vec<usize>, mut f: F) -> Result<Self> {
        let axes: Vec<Vec<T>> = shape.iter().map(|&n| axis_nodes(n)).collect();
        let total: usize = shape.iter().product();
        let mut values = Vec::with_capacity(total);
        let mut idx = vec![0usize; shape.len()];
        let mut x = vec![T::zero(); shape.len()];
        for _ in 0..total {
            for (j, &i) in idx.iter().enumerate() {
                x[j] = axes[j][i];
            }
            values.push(f(&x));
            for j in (0..shape.len()).rev() {
                idx[j] += 1;
                if idx[j] < shape[j] {
                    break;
                }
                idx[j] = 0;
            }
        }
        Self::new(shape, values)
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn nodes(&self, axis: usize) -> Vec<T> {
        axis_nodes(self.shape[axis])
    }

    /// `int |f|^2` by the same quadrature used for projection.
    pub fn l2_norm_sq(&self) -> T {
        let w: Vec<Vec<T>> = self.shape.iter().map(|&n| simpson_weights(n)).collect();
        let sq: Vec<Complex<T>> = self
            .values
            .iter()
            .map(|v| Complex::new(v.norm_sqr(), T::zero()))
            .collect();
        let mats: Vec<Vec<Vec<Complex<T>>>> = w
            .iter()
            .map(|wj| vec![wj.iter().map(|&x| Complex::new(x, T::zero())).collect()])
            .collect();
        contract_all(sq, &self.shape, &mats)[0].re
    }
}

pub fn axis_nodes<T: Real>(n: usize) -> Vec<T> {
    uniform_nodes(T::zero(), T::PI(), n)
}

/// Composite Simpson weights on `n` uniform points of `[0, pi]`; an even point
/// count closes with the 3/8 rule on the last three intervals.
pub fn simpson_weights<T: Real>(n: usize) -> Vec<T> {
    assert!(n >= 4, "Simpson weights need at least 4 points");
    let h = T::PI() / T::from_usize_lossy(n - 1);
    let mut w = vec![T::zero(); n];
    let intervals = n - 1;
    let simpson_end = if intervals % 2 == 0 { intervals } else { intervals - 3 };
    let third = h / T::lit(3.0);
    let mut i = 0;
    while i < simpson_end {
        w[i] += third;
        w[i + 1] += T::lit(4.0) * third;
        w[i + 2] += third;
        i += 2;
    }
    if simpson_end < intervals {
        let e = T::lit(3.0) * h / T::lit(8.0);
        let s = simpson_end;
        w[s] += e;
        w[s + 1] += T::lit(3.0) * e;
        w[s + 2] += T::lit(3.0) * e;
        w[s + 3] += e;
    }
    w
}

/// Trapezoid weights on `n` uniform points of `[0, pi]`.
pub fn trapezoid_weights<T: Real>(n: usize) -> Vec<T> {
    assert!(n >= 2, "trapezoid weights need at least 2 points");
    let h = T::PI() / T::from_usize_lossy(n - 1);
    let mut w = vec![h; n];
    w[0] = h / T::lit(2.0);
    w[n - 1] = h / T::lit(2.0);
    w
}

/// Quadrature weights used to project onto the factors of `axis`: trapezoid on
/// Periodic axes (exact for trigonometric data below the grid frequency),
/// Simpson elsewhere.
pub fn axis_weights<T: Real>(axis: &AxisSpec<T>, n: usize) -> Vec<T> {
    match axis.kind {
        AxisKind::Periodic => trapezoid_weights(n),
        _ => simpson_weights(n),
    }
}

/// Contracts axis after axis with `mats[j]` (rows: output index, cols: grid index).
pub(crate) fn contract_all<T: Real>(
    mut data: Vec<Complex<T>>,
    shape: &[usize],
    mats: &[Vec<Vec<Complex<T>>>],
) -> Vec<Complex<T>> {
    let mut shape = shape.to_vec();
    for (j, mat) in mats.iter().enumerate() {
        let outer: usize = shape[..j].iter().product();
        let inner: usize = shape[j + 1..].iter().product();
        let n = shape[j];
        let k = mat.len();
        let mut out = vec![Complex::zero(); outer * k * inner];
        for o in 0..outer {
            for (r, row) in mat.iter().enumerate() {
                let dst = &mut out[(o * k + r) * inner..(o * k + r + 1) * inner];
                for (i, &c) in row.iter().enumerate().take(n) {
                    if c.is_zero() {
                        continue;
                    }
                    let src = &data[(o * n + i) * inner..(o * n + i + 1) * inner];
                    for (d, &s) in dst.iter_mut().zip(src) {
                        *d = *d + s * c;
                    }
                }
            }
        }
        data = out;
        shape[j] = k;
    }
    data
}

/// Finitely supported coefficient map.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffSet<T> {
    pub radius: usize,
    pub coeffs: BTreeMap<ModeIndex, Complex<T>>,
}

impl<T: Real> CoeffSet<T> {
    pub fn empty(radius: usize) -> Self {
        Self {
            radius,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn get(&self, m: &ModeIndex) -> Complex<T> {
        self.coeffs.get(m).copied().unwrap_or_else(Complex::zero)
    }

    pub fn insert(&mut self, m: ModeIndex, c: Complex<T>) {
        self.coeffs.insert(m, c);
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ModeIndex, &Complex<T>)> {
        self.coeffs.iter()
    }

    /// Entrywise `self + k * other` over the union of supports.
    pub fn axpy(&self, k: Complex<T>, other: &Self) -> Self {
        let mut out = self.clone();
        out.radius = self.radius.max(other.radius);
        for (m, &c) in &other.coeffs {
            let e = out.coeffs.entry(m.clone()).or_insert_with(Complex::zero);
            *e = *e + k * c;
        }
        out
    }
}

pub(crate) fn axis_modes<T: Real>(spec: &BoxSpec<T>, j: usize, radius: usize) -> Vec<i64> {
    let r = radius as i64;
    match spec.axes()[j].kind {
        AxisKind::Dirichlet => (1..=r).collect(),
        _ => (-r..=r).collect(),
    }
}

/// Fewest grid points per axis that resolve every mode up to `radius`.
pub fn min_axis_points(radius: usize) -> usize {
    (4 * radius).max(MIN_AXIS_POINTS)
}

fn check_resolution(shape: &[usize], radius: usize) -> Result<()> {
    for (axis, &n) in shape.iter().enumerate() {
        let required = min_axis_points(radius);
        if n < required {
            return Err(Error::Alias {
                axis,
                points: n,
                required,
            });
        }
    }
    Ok(())
}

/// Conjugated, weighted factor samples for one axis: `w_i conj(v_m(x_i))`.
fn projection_matrix<T: Real>(spec: &BoxSpec<T>, j: usize, n: usize, modes: &[i64]) -> Result<Vec<Vec<Complex<T>>>> {
    let axis = &spec.axes()[j];
    let x = axis_nodes::<T>(n);
    let w = axis_weights::<T>(axis, n);
    modes
        .iter()
        .map(|&m| {
            let l = crate::basis::axis_lambda(axis, m)?;
            Ok(x.iter()
                .zip(&w)
                .map(|(&xi, &wi)| axis_factor(axis, l, xi, 0).conj() * wi)
                .collect())
        })
        .collect()
}

fn gather<T: Real>(
    spec: &BoxSpec<T>,
    radius: usize,
    per_axis: &[Vec<i64>],
    flat: Vec<Complex<T>>,
) -> CoeffSet<T> {
    let mut out = CoeffSet::empty(radius);
    let counts: Vec<usize> = per_axis.iter().map(Vec::len).collect();
    let mut idx = vec![0usize; counts.len()];
    for c in flat {
        let m: Vec<i64> = idx.iter().enumerate().map(|(j, &i)| per_axis[j][i]).collect();
        out.insert(ModeIndex(m), c);
        for j in (0..counts.len()).rev() {
            idx[j] += 1;
            if idx[j] < counts[j] {
                break;
            }
            idx[j] = 0;
        }
    }
    let _ = spec;
    out
}

/// Coefficients of grid data on every mode of the truncation box of `radius`.
pub fn project<T: Real>(data: &GridFn<T>, spec: &BoxSpec<T>, radius: usize) -> Result<CoeffSet<T>> {
    if data.shape().len() != spec.dim() {
        return Err(Error::InvalidParameter(format!(
            "grid has {} axes, box has {}",
            data.shape().len(),
            spec.dim()
        )));
    }
    check_resolution(data.shape(), radius)?;
    let per_axis: Vec<Vec<i64>> = (0..spec.dim()).map(|j| axis_modes(spec, j, radius)).collect();
    let mats = (0..spec.dim())
        .map(|j| projection_matrix(spec, j, data.shape()[j], &per_axis[j]))
        .collect::<Result<Vec<_>>>()?;
    let flat = contract_all(data.values().to_vec(), data.shape(), &mats);
    Ok(gather(spec, radius, &per_axis, flat))
}

/// Coefficients of a separable function `prod_j g_j(x_j)` given per-axis samples
/// on uniform grids; avoids forming the tensor.
pub fn project_separable<T: Real>(
    factors: &[Vec<Complex<T>>],
    spec: &BoxSpec<T>,
    radius: usize,
) -> Result<CoeffSet<T>> {
    if factors.len() != spec.dim() {
        return Err(Error::InvalidParameter(format!(
            "{} factors for a box with {} axes",
            factors.len(),
            spec.dim()
        )));
    }
    let shape: Vec<usize> = factors.iter().map(Vec::len).collect();
    check_resolution(&shape, radius)?;
    let per_axis: Vec<Vec<i64>> = (0..spec.dim()).map(|j| axis_modes(spec, j, radius)).collect();
    let mut one_d = Vec::with_capacity(spec.dim());
    for j in 0..spec.dim() {
        let mat = projection_matrix(spec, j, shape[j], &per_axis[j])?;
        let c: Vec<Complex<T>> = mat
            .iter()
            .map(|row| row.iter().zip(&factors[j]).fold(Complex::zero(), |a, (&w, &g)| a + w * g))
            .collect();
        one_d.push(c);
    }
    let mut flat = vec![Complex::new(T::one(), T::zero())];
    for c in &one_d {
        flat = flat.iter().flat_map(|&a| c.iter().map(move |&b| a * b)).collect();
    }
    Ok(gather(spec, radius, &per_axis, flat))
}

/// Truncated series `sum c_m v_m(x)` (L2-normalized eigenfunctions).
pub fn reconstruct<T: Real>(coeffs: &CoeffSet<T>, spec: &BoxSpec<T>, x: &[T]) -> Result<Complex<T>> {
    let mut acc = Complex::zero();
    for (m, &c) in coeffs.iter() {
        if c.is_zero() {
            continue;
        }
        acc = acc + c * eigenfunction_eval(spec, m, x, Normalization::L2)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    /// `prod (1 + |lambda_k|^{s_k})`
    S,
    /// `prod (1 + |lambda_k|^{2 s_k})`
    TwoS,
}

pub fn mode_weight<T: Real>(spec: &BoxSpec<T>, m: &ModeIndex, mode: WeightMode) -> Result<T> {
    let ed = eigen_data(spec, m)?;
    let k = match mode {
        WeightMode::S => T::one(),
        WeightMode::TwoS => T::lit(2.0),
    };
    Ok(spec
        .axes()
        .iter()
        .zip(&ed.lambda)
        .map(|(a, &l)| T::one() + l.abs().powf(k * a.s))
        .fold(T::one(), |p, f| p * f))
}

/// `sum |c_m|^2 prod_k (1 + |lambda_k|^{s_k or 2 s_k})`.
pub fn sobolev_coeff_norm<T: Real>(coeffs: &CoeffSet<T>, spec: &BoxSpec<T>, mode: WeightMode) -> Result<T> {
    let mut acc = T::zero();
    for (m, c) in coeffs.iter() {
        acc += c.norm_sqr() * mode_weight(spec, m, mode)?;
    }
    Ok(acc)
}
