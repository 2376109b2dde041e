//! Inversion of the Laplace transform `s^(a-b) / (s^a - z)` on an optimal
//! parabolic contour (Garrappa's scheme for the Mittag-Leffler function).

use num_complex::Complex;

use crate::real::Real;

struct Contour<T> {
    mu: T,
    h: T,
    n: usize,
}

fn region_bounded<T: Real>(
    phi_j: T,
    phi_j1: T,
    pj: T,
    qj: T,
    mut log_tol: T,
) -> Option<Contour<T>> {
    let log_eps = T::epsilon().ln();
    let fac = T::lit(1.01);
    let small = T::lit(1e-14);
    let f_max = (log_tol - log_eps).exp();
    let sq_j = phi_j.sqrt();
    let threshold = T::lit(2.0) * (log_tol - log_eps).sqrt();
    let sq_j1 = phi_j1.sqrt().min(threshold - sq_j);
    let two = T::lit(2.0);

    let (bar_j, bar_j1, f_bar) = if pj < small && qj < small {
        (sq_j, sq_j1, T::one())
    } else if pj < small {
        let f_min = if sq_j > T::zero() {
            fac * (sq_j / (sq_j1 - sq_j)).powf(qj)
        } else {
            fac
        };
        if f_min >= f_max {
            return None;
        }
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fq = f_bar.powf(-T::one() / qj);
        (sq_j, (two * sq_j1 - fq * sq_j) / (two + fq), f_bar)
    } else if qj < small {
        let f_min = fac * (sq_j1 / (sq_j1 - sq_j)).powf(pj);
        if f_min >= f_max {
            return None;
        }
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-T::one() / pj);
        ((two * sq_j + fp * sq_j1) / (two - fp), sq_j1, f_bar)
    } else {
        let f_min = fac * (sq_j + sq_j1) / (sq_j1 - sq_j).powf(pj.max(qj));
        if f_min >= f_max {
            return None;
        }
        let f_min = f_min.max(T::lit(1.5));
        let f_bar = f_min + f_min / f_max * (f_max - f_min);
        let fp = f_bar.powf(-T::one() / pj);
        let fq = f_bar.powf(-T::one() / qj);
        let w = -phi_j1 / log_tol;
        let den = two + w - (T::one() + w) * fp + fq;
        let bj = ((two + w + fq) * sq_j + fp * sq_j1) / den;
        let bj1 = (-(T::one() + w) * fq * sq_j + (two + w - (T::one() + w) * fp) * sq_j1) / den;
        (bj, bj1, f_bar)
    };

    log_tol -= f_bar.ln();
    let w = -bar_j1 * bar_j1 / log_tol;
    let mu = (((T::one() + w) * bar_j + bar_j1) / (two + w)).powi(2);
    let h = -T::TAU() / log_tol * (bar_j1 - bar_j) / ((T::one() + w) * bar_j + bar_j1);
    let n = ((T::one() - log_tol / mu).sqrt() / h).ceil();
    if !(n.is_finite() && h > T::zero() && mu > T::zero()) {
        return None;
    }
    Some(Contour {
        mu,
        h,
        n: n.to_usize()?,
    })
}

fn region_unbounded<T: Real>(phi_j: T, pj: T, log_tol: T) -> Option<Contour<T>> {
    let small = T::lit(1e-14);
    let sq_phi = phi_j.sqrt();
    let mut phibar = if phi_j > T::zero() {
        phi_j * T::lit(1.01)
    } else {
        T::lit(0.01)
    };
    let mut sq_phibar = phibar.sqrt();
    let (f_min, f_max, f_tar) = (T::one(), T::lit(10.0), T::lit(5.0));
    let mut n;
    let mut a;
    let mut sq_mu;
    let mut guard = 0;
    loop {
        let phi_t = phibar;
        let log_eps_phi_t = log_tol / phi_t;
        n = (phi_t / T::PI()
            * (T::one() - T::lit(1.5) * log_eps_phi_t + (T::one() - T::lit(2.0) * log_eps_phi_t).sqrt()))
        .ceil();
        a = T::PI() * n / phi_t;
        sq_mu = sq_phibar * (T::lit(4.0) - a).abs()
            / (T::lit(7.0) - (T::one() + T::lit(12.0) * a).sqrt()).abs();
        let fbar = ((sq_phibar - sq_phi) / sq_mu).powf(-pj);
        if pj < small || (f_min < fbar && fbar < f_max) {
            break;
        }
        sq_phibar = f_tar.powf(-T::one() / pj) * sq_mu + sq_phi;
        phibar = sq_phibar * sq_phibar;
        guard += 1;
        if guard > 100 {
            return None;
        }
    }
    let mut mu = sq_mu * sq_mu;
    let mut h = (-T::lit(3.0) * a - T::lit(2.0) + T::lit(2.0) * (T::one() + T::lit(12.0) * a).sqrt())
        / (T::lit(4.0) - a)
        / n;
    let log_eps = T::epsilon().ln();
    let threshold = log_tol - log_eps;
    if mu > threshold {
        let q = if pj.abs() < small {
            T::zero()
        } else {
            f_tar.powf(-T::one() / pj) * mu.sqrt()
        };
        let phibar = (q + sq_phi).powi(2);
        if phibar < threshold {
            let w = (log_eps / (log_eps - log_tol)).sqrt();
            let u = (-phibar / log_eps).sqrt();
            mu = threshold;
            n = (w * log_tol / T::TAU() / (u * w - T::one())).ceil();
            h = w / n;
        } else {
            return None;
        }
    }
    if !(n.is_finite() && h > T::zero()) {
        return None;
    }
    Some(Contour {
        mu,
        h,
        n: n.to_usize()?,
    })
}

/// `E_{alpha,beta}(z)` by contour integration plus residues of the poles left of
/// the chosen contour. `log_tol` is the natural log of the target accuracy.
pub fn lt_inversion<T: Real>(alpha: T, beta: T, z: T, log_tol: T) -> Option<T> {
    let theta = if z < T::zero() { T::PI() } else { T::zero() };
    let w = z.abs().powf(T::one() / alpha);
    let two_pi = T::TAU();
    let kmin = (-alpha / T::lit(2.0) - theta / two_pi).ceil().to_i64()?;
    let kmax = (alpha / T::lit(2.0) - theta / two_pi).floor().to_i64()?;

    let mut poles: Vec<(T, Complex<T>)> = (kmin..=kmax)
        .map(|k| {
            let arg = (theta + two_pi * T::lit(k as f64)) / alpha;
            let s = Complex::from_polar(w, arg);
            ((s.re + s.norm()) / T::lit(2.0), s)
        })
        .filter(|(phi, _)| *phi > T::lit(1e-15))
        .collect();
    poles.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite pole abscissa"));

    let mut phis = vec![T::zero()];
    phis.extend(poles.iter().map(|p| p.0));
    let j1 = phis.len();
    let gamma = T::one();
    let mut p = vec![T::zero().max(-T::lit(2.0) * (alpha * gamma - beta + T::one()))];
    p.extend(std::iter::repeat(gamma).take(j1 - 1));
    let mut q: Vec<T> = std::iter::repeat(gamma).take(j1 - 1).collect();
    q.push(T::infinity());
    phis.push(T::infinity());

    let log_eps = T::epsilon().ln();
    let admissible: Vec<usize> = (0..j1)
        .filter(|&j| phis[j] < log_tol - log_eps && phis[j] < phis[j + 1])
        .collect();
    if admissible.is_empty() {
        return None;
    }

    let mut log_tol = log_tol;
    let (best_idx, contour) = loop {
        let mut best: Option<(usize, Contour<T>)> = None;
        for &j in &admissible {
            let c = if j < j1 - 1 {
                region_bounded(phis[j], phis[j + 1], p[j], q[j], log_tol)
            } else {
                region_unbounded(phis[j], p[j], log_tol)
            };
            if let Some(c) = c {
                if best.as_ref().map_or(true, |(_, b)| c.n < b.n) {
                    best = Some((j, c));
                }
            }
        }
        match best {
            Some((j, c)) if c.n <= 200 => break (j, c),
            _ if log_tol < T::lit(-2.0) => log_tol += T::LN_10(),
            Some(b) => break b,
            None => return None,
        }
    };

    let Contour { mu, h, n } = contour;
    let i = Complex::<T>::i();
    let n_i = n as i64;
    let mut integral = Complex::<T>::new(T::zero(), T::zero());
    let zc = Complex::new(z, T::zero());
    for k in -n_i..=n_i {
        let u = h * T::lit(k as f64);
        let zz = (i * u + T::one()).powi(2) * mu;
        let zd = Complex::new(-T::lit(2.0) * mu * u, T::lit(2.0) * mu);
        let f = zz.powf(alpha - beta) / (zz.powf(alpha) - zc) * zd;
        integral = integral + zz.exp() * f;
    }
    integral = integral * h / (i * two_pi);

    let mut residues = Complex::new(T::zero(), T::zero());
    for &(_, s) in poles.iter().skip(best_idx) {
        residues = residues + s.powf(T::one() - beta) * s.exp() / alpha;
    }
    let e = (integral + residues).re;
    e.is_finite().then_some(e)
}
