//! Two-parameter Mittag-Leffler function `E_{a,b}(z) = sum z^k / Gamma(a k + b)`
//! for real arguments.

use std::sync::OnceLock;

use super::gamma::{cos_pi, ln_gamma, rgamma};
use super::laplace::lt_inversion;
use crate::cheb::ChebPanel;
use crate::error::{Error, Result};
use crate::real::Real;

/// Series parameters `(alpha, beta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlParams<T> {
    pub alpha: T,
    pub beta: T,
}

impl<T: Real> MlParams<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        if !(alpha > T::zero()) || !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Mittag-Leffler parameters need alpha > 0 and finite beta (got {alpha}, {beta})"
            )));
        }
        Ok(Self { alpha, beta })
    }
}

const MAX_TERMS: usize = 10_000;

/// Accuracy below which a partial scheme result is accepted without falling back.
fn certify_tol<T: Real>() -> T {
    T::epsilon() * T::lit(1e3)
}

fn convergence<T: Real>(p: MlParams<T>, z: T, reason: &'static str) -> Error {
    Error::Convergence {
        alpha: p.alpha.as_f64(),
        beta: p.beta.as_f64(),
        z: z.as_f64(),
        reason,
    }
}

/// Supplies the series coefficients `1/Gamma(a k + b)` and `1/Gamma(b - a k)`.
trait Coeffs<T> {
    fn taylor(&self, k: usize) -> T;
    fn asym(&self, k: usize) -> T;
}

struct Direct<T>(MlParams<T>);

impl<T: Real> Coeffs<T> for Direct<T> {
    fn taylor(&self, k: usize) -> T {
        rgamma(self.0.alpha * T::from_usize_lossy(k) + self.0.beta)
    }

    fn asym(&self, k: usize) -> T {
        rgamma(self.0.beta - self.0.alpha * T::from_usize_lossy(k))
    }
}

struct Tabled<'a, T> {
    p: MlParams<T>,
    taylor: &'a [T],
    asym: &'a [T],
}

impl<T: Real> Coeffs<T> for Tabled<'_, T> {
    fn taylor(&self, k: usize) -> T {
        match self.taylor.get(k) {
            Some(&c) => c,
            None => Direct(self.p).taylor(k),
        }
    }

    fn asym(&self, k: usize) -> T {
        match self.asym.get(k) {
            Some(&c) => c,
            None => Direct(self.p).asym(k),
        }
    }
}

/// Taylor series. Returns `(sum, sum of |terms|)`.
fn taylor<T: Real, C: Coeffs<T>>(p: MlParams<T>, z: T, coeffs: &C) -> Result<(T, T)> {
    let MlParams { alpha, beta } = p;
    let log_abs_z = z.abs().ln();
    let neg = z < T::zero();
    let mut sum = T::zero();
    let mut abs_sum = T::zero();
    let mut zk = T::one();
    let mut prev = T::infinity();
    for k in 0..MAX_TERMS {
        let kk = T::from_usize_lossy(k);
        let arg = alpha * kk + beta;
        let term = if arg < T::lit(160.0) && zk.is_finite() && zk != T::zero() {
            let t = zk * coeffs.taylor(k);
            zk *= z;
            t
        } else {
            zk = T::infinity();
            let (lg, sg) = ln_gamma(arg).unwrap_or((T::infinity(), T::one()));
            let mag = (kk * log_abs_z - lg).exp();
            let sign = if neg && k % 2 == 1 { -sg } else { sg };
            sign * mag
        };
        sum += term;
        abs_sum += term.abs();
        let small = term.abs() <= T::epsilon() * T::lit(1e-2) * sum.abs();
        if k > 0 && arg > T::one() && small && prev.abs() <= T::epsilon() * sum.abs() {
            return Ok((sum, abs_sum));
        }
        if sum.is_infinite() {
            return Ok((sum, abs_sum));
        }
        prev = term;
    }
    Err(convergence(p, z, "Taylor series hit the term cap"))
}

/// Asymptotic expansion for large `|z|`. Returns `(value, error estimate)`.
fn asymptotic<T: Real, C: Coeffs<T>>(p: MlParams<T>, z: T, coeffs: &C) -> (T, T) {
    let MlParams { alpha, beta } = p;
    let w = z.abs().powf(T::one() / alpha);
    let (theta_units, two) = (if z < T::zero() { 1.0 } else { 0.0 }, T::lit(2.0));
    let theta = T::lit(theta_units) * T::PI();
    let kmin = (-alpha / two - theta / T::TAU()).ceil().to_i64().unwrap_or(0);
    let kmax = (alpha / two - theta / T::TAU()).floor().to_i64().unwrap_or(-1);
    let mut poles = T::zero();
    for k in kmin..=kmax {
        let units = T::lit(theta_units + 2.0 * k as f64);
        let arg = units * T::PI() / alpha;
        let weight = if units.abs() == alpha {
            T::lit(0.5)
        } else {
            T::one()
        };
        let (re, im) = (w * arg.cos(), w * arg.sin());
        let phase = if im == T::zero() && units.abs() == alpha {
            // Pole on the negative axis: (w e^{i pi})^{1-b}.
            cos_pi((T::one() - beta) * units / alpha)
        } else {
            ((T::one() - beta) * arg + im).cos()
        };
        let mag = (w.ln() * (T::one() - beta) + re).exp();
        poles += weight * mag * phase / alpha;
    }

    // Near-poles of 1/Gamma make single terms tiny, so convergence and
    // divergence are judged on the envelope of two consecutive nonzero terms.
    let zinv = T::one() / z;
    let mut pw = T::one();
    let mut alg = T::zero();
    let mut abs_alg = T::zero();
    let mut prev_abs: Option<T> = None;
    let mut env_prev = T::infinity();
    let mut err = T::zero();
    let kcap = (T::lit(4.0) * w / alpha).to_usize().unwrap_or(MAX_TERMS).clamp(8, MAX_TERMS);
    // integer alpha and beta: every coefficient past the last pole vanishes
    let all_poles = alpha.fract() == T::zero() && beta.fract() == T::zero();
    for k in 1..=kcap {
        pw *= zinv;
        let r = coeffs.asym(k);
        if r == T::zero() {
            if all_poles && beta - alpha * T::from_usize_lossy(k) <= T::zero() {
                break;
            }
            continue;
        }
        let t = pw * r;
        let env = prev_abs.map_or(t.abs(), |p| p.max(t.abs()));
        if prev_abs.is_some() && env > env_prev {
            err = env_prev;
            break;
        }
        alg -= t;
        abs_alg += t.abs();
        prev_abs = Some(t.abs());
        env_prev = env;
        err = env;
        if env <= T::epsilon() * T::lit(1e-2) * alg.abs() {
            break;
        }
    }
    let value = poles + alg;
    let round = T::epsilon() * T::lit(4.0) * (abs_alg + poles.abs());
    (value, err + round)
}

fn lt_log_tol<T: Real>() -> T {
    (T::epsilon() * T::lit(10.0)).max(T::lit(1e-15)).ln()
}

/// Width in `w = |z|^{1/alpha}` below which the Taylor series is tried first.
fn taylor_limit<T: Real>() -> T {
    (T::one() / T::epsilon()).ln() / T::lit(3.0)
}

/// Uncached evaluation of `E_{alpha,beta}(z)`.
pub fn mittag_leffler<T: Real>(p: MlParams<T>, z: T) -> Result<T> {
    let p = MlParams::new(p.alpha, p.beta)?;
    evaluate(p, z, &Direct(p))
}

fn evaluate<T: Real, C: Coeffs<T>>(p: MlParams<T>, z: T, coeffs: &C) -> Result<T> {
    if !z.is_finite() {
        return Err(Error::InvalidParameter(format!("non-finite argument {z}")));
    }
    if z == T::zero() {
        return Ok(rgamma(p.beta));
    }
    let w = z.abs().powf(T::one() / p.alpha);
    let tol = certify_tol::<T>();

    if z > T::zero() {
        if w <= T::lit(40.0) {
            let (s, a) = taylor(p, z, coeffs)?;
            if a * T::epsilon() <= tol * s.abs() || s.is_infinite() {
                return Ok(s);
            }
        }
        let (v, err) = asymptotic(p, z, coeffs);
        if err <= tol * v.abs() || v.is_infinite() {
            return Ok(v);
        }
        return lt_inversion(p.alpha, p.beta, z, lt_log_tol())
            .ok_or_else(|| convergence(p, z, "no scheme certified the target accuracy"));
    }

    if w <= taylor_limit::<T>() {
        let (s, a) = taylor(p, z, coeffs)?;
        if a * T::epsilon() <= tol * s.abs() {
            return Ok(s);
        }
    }
    // certified, so worth trying before the contour, whose error is absolute
    if w >= T::lit(2.0) {
        let (v, err) = asymptotic(p, z, coeffs);
        if err <= tol * v.abs() {
            return Ok(v);
        }
    }
    lt_inversion(p.alpha, p.beta, z, lt_log_tol())
        .ok_or_else(|| convergence(p, z, "contour inversion failed"))
}

/// Three-parameter function with `gamma = 2`, via
/// `E^2_{a,b}(z) = [E_{a,b-1}(z) + (a - b + 1) E_{a,b}(z)] / a`.
pub fn mittag_leffler_prabhakar2<T: Real>(p: MlParams<T>, z: T) -> Result<T> {
    let lower = mittag_leffler(MlParams::new(p.alpha, p.beta - T::one())?, z)?;
    let upper = mittag_leffler(p, z)?;
    Ok((lower + (p.alpha - p.beta + T::one()) * upper) / p.alpha)
}

const BAND_LO: f64 = 2.0;
const BAND_HI: f64 = 40.0;
const PANEL_POINTS: usize = 22;
const COEFF_TABLE: usize = 512;

/// Mittag-Leffler evaluator for fixed `(alpha, beta)`. Negative arguments with
/// `|z|^{1/alpha}` in the crossover band are served from a Chebyshev table built
/// on first use; everything else goes to [`mittag_leffler`].
#[derive(Debug)]
pub struct MittagLeffler<T> {
    params: MlParams<T>,
    band: OnceLock<Option<Vec<ChebPanel<T>>>>,
    coeffs: OnceLock<(Vec<T>, Vec<T>)>,
}

impl<T: Real> Clone for MittagLeffler<T> {
    fn clone(&self) -> Self {
        let band = OnceLock::new();
        if let Some(b) = self.band.get() {
            let _ = band.set(b.clone());
        }
        let coeffs = OnceLock::new();
        if let Some(c) = self.coeffs.get() {
            let _ = coeffs.set(c.clone());
        }
        Self {
            params: self.params,
            band,
            coeffs,
        }
    }
}

impl<T: Real> MittagLeffler<T> {
    pub fn new(alpha: T, beta: T) -> Result<Self> {
        Ok(Self {
            params: MlParams::new(alpha, beta)?,
            band: OnceLock::new(),
            coeffs: OnceLock::new(),
        })
    }

    pub fn params(&self) -> MlParams<T> {
        self.params
    }

    fn band(&self) -> Option<&[ChebPanel<T>]> {
        self.band
            .get_or_init(|| {
                let lo = BAND_LO as usize;
                let hi = BAND_HI as usize;
                let p = self.params;
                (lo..hi)
                    .map(|k| {
                        ChebPanel::try_sample(
                            T::from_usize_lossy(k),
                            T::from_usize_lossy(k + 1),
                            PANEL_POINTS,
                            |w| mittag_leffler(p, -w.powf(p.alpha)),
                        )
                    })
                    .collect::<Result<Vec<_>>>()
                    .ok()
            })
            .as_deref()
    }

    fn tables(&self) -> Tabled<'_, T> {
        let (taylor, asym) = self.coeffs.get_or_init(|| {
            let d = Direct(self.params);
            let MlParams { alpha, beta } = self.params;
            let nt = ((T::lit(160.0) - beta) / alpha)
                .to_usize()
                .unwrap_or(0)
                .min(COEFF_TABLE);
            let taylor = (0..nt).map(|k| d.taylor(k)).collect();
            let asym = (0..COEFF_TABLE).map(|k| if k == 0 { T::zero() } else { d.asym(k) }).collect();
            (taylor, asym)
        });
        Tabled {
            p: self.params,
            taylor,
            asym,
        }
    }

    pub fn eval(&self, z: T) -> Result<T> {
        if z < T::zero() && z.is_finite() {
            let w = (-z).powf(T::one() / self.params.alpha);
            if w >= T::lit(BAND_LO) && w < T::lit(BAND_HI) {
                if let Some(band) = self.band() {
                    let idx = (w.to_usize().unwrap_or(0)).saturating_sub(BAND_LO as usize);
                    let panel = &band[idx.min(band.len() - 1)];
                    return Ok(panel.eval(w));
                }
            }
        }
        evaluate(self.params, z, &self.tables())
    }
}
