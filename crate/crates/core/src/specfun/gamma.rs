//! Gamma function and friends (Lanczos, g = 7, n = 9).

use crate::error::{Error, Result};
use crate::real::Real;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_sum<T: Real>(z: T) -> T {
    let mut acc = T::lit(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += T::lit(c) / (z + T::from_usize_lossy(i));
    }
    acc
}

/// `sin(pi x)` with exact argument reduction, so zeros at integers are exact.
pub fn sin_pi<T: Real>(x: T) -> T {
    let n = x.round();
    let r = x - n;
    let odd = (n / T::lit(2.0)).fract() != T::zero();
    let s = (T::PI() * r).sin();
    if odd {
        -s
    } else {
        s
    }
}

/// `cos(pi x)` with exact argument reduction.
pub fn cos_pi<T: Real>(x: T) -> T {
    sin_pi(x + T::lit(0.5))
}

fn is_nonpositive_integer<T: Real>(x: T) -> bool {
    x <= T::zero() && x == x.floor()
}

fn factorial<T: Real>(n: usize) -> T {
    let mut acc = 1.0f64;
    for k in 2..=n {
        acc *= k as f64;
    }
    T::lit(acc)
}

fn gamma_positive<T: Real>(x: T) -> T {
    // x >= 0.5
    if x == x.floor() && x <= T::lit(171.0) {
        let n = x.to_usize().unwrap_or(0);
        return factorial(n.saturating_sub(1));
    }
    if x > T::lit(12.0) {
        // Lanczos loses relative accuracy linearly in x; recur up from [10, 11).
        let n = (x.floor() - T::lit(10.0)).to_usize().unwrap_or(0);
        let r = x - T::from_usize_lossy(n);
        let mut acc = gamma_positive(r);
        for k in 0..n {
            acc *= r + T::from_usize_lossy(k);
        }
        return acc;
    }
    let z = x - T::one();
    let t = z + T::lit(LANCZOS_G + 0.5);
    let half_pow = t.powf((z + T::lit(0.5)) / T::lit(2.0));
    (T::TAU()).sqrt() * half_pow * (-t).exp() * half_pow * lanczos_sum(z)
}

/// Gamma function. Fails at the poles `0, -1, -2, ...`.
pub fn gamma<T: Real>(x: T) -> Result<T> {
    if x.is_nan() {
        return Ok(x);
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x.as_f64()));
    }
    if x >= T::lit(0.5) {
        return Ok(gamma_positive(x));
    }
    let s = sin_pi(x);
    let g = gamma_positive(T::one() - x);
    if g.is_infinite() {
        let (lg, sign) = ln_gamma(x)?;
        return Ok(sign * lg.exp());
    }
    Ok(T::PI() / (s * g))
}

/// Reciprocal gamma; entire, so it returns exactly zero at the poles.
pub fn rgamma<T: Real>(x: T) -> T {
    if is_nonpositive_integer(x) {
        return T::zero();
    }
    if x > T::lit(171.0) {
        let (lg, _) = ln_gamma(x).expect("no pole on the positive axis");
        return (-lg).exp();
    }
    if x < T::lit(-170.0) {
        let (lg, sign) = ln_gamma(x).expect("pole filtered above");
        return sign * (-lg).exp();
    }
    match gamma(x) {
        Ok(g) if g.is_finite() => T::one() / g,
        Ok(_) => T::zero(),
        Err(_) => T::zero(),
    }
}

/// `(ln |Gamma(x)|, sign Gamma(x))`.
pub fn ln_gamma<T: Real>(x: T) -> Result<(T, T)> {
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x.as_f64()));
    }
    if x >= T::lit(0.5) {
        let z = x - T::one();
        let t = z + T::lit(LANCZOS_G + 0.5);
        let lg = T::lit(0.5) * T::TAU().ln() + (z + T::lit(0.5)) * t.ln() - t
            + lanczos_sum(z).ln();
        return Ok((lg, T::one()));
    }
    let s = sin_pi(x);
    let (lg1, _) = ln_gamma(T::one() - x)?;
    let sign = if s < T::zero() { -T::one() } else { T::one() };
    Ok((T::PI().ln() - s.abs().ln() - lg1, sign))
}
