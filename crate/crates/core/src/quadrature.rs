//! Gauss rules on `[-1, 1]`. Nodes are computed once in `f64` by Newton iteration.

use crate::real::Real;
use crate::specfun::ln_gamma;

#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrates `f` over `[a, b]` (weight function included in the rule is
    /// mapped along, without the Jacobian of the weight).
    pub fn integrate<T: Real, C, F>(&self, a: T, b: T, mut f: F) -> C
    where
        C: Copy + std::ops::Add<Output = C> + std::ops::Mul<T, Output = C> + num_traits::Zero,
        F: FnMut(T) -> C,
    {
        let half = T::lit(0.5) * (b - a);
        let mid = T::lit(0.5) * (a + b);
        let mut acc = C::zero();
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc = acc + f(mid + half * T::lit(x)) * (T::lit(w) * half);
        }
        acc
    }
}

/// `n`-point Gauss-Legendre rule.
pub fn gauss_legendre(n: usize) -> GaussRule {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            let (mut p1, mut p2) = (1.0, 0.0);
            for j in 0..n {
                let p3 = p2;
                p2 = p1;
                p1 = ((2 * j + 1) as f64 * z * p2 - j as f64 * p3) / (j + 1) as f64;
            }
            pp = n as f64 * (z * p1 - p2) / (z * z - 1.0);
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 {
                break;
            }
        }
        nodes[i] = -z;
        nodes[n - 1 - i] = z;
        let w = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    GaussRule { nodes, weights }
}

/// `n`-point Gauss-Jacobi rule for the weight `(1 - x)^a (1 + x)^b`, `a, b > -1`.
/// Nodes are returned in increasing order.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> GaussRule {
    assert!(n >= 2 && a > -1.0 && b > -1.0);
    let mut x = vec![0.0f64; n];
    let mut w = vec![0.0f64; n];
    let nf = n as f64;
    let ab = a + b;
    let lg = |v: f64| ln_gamma(v).expect("positive argument").0;
    let mut z = 0.0f64;
    for i in 0..n {
        if i == 0 {
            let an = a / nf;
            let bn = b / nf;
            let r1 = (1.0 + a) * (2.78 / (4.0 + nf * nf) + 0.768 * an / nf);
            let r2 = 1.0 + 1.48 * an + 0.96 * bn + 0.452 * an * an + 0.83 * an * bn;
            z = 1.0 - r1 / r2;
        } else if i == 1 {
            let r1 = (4.1 + a) / ((1.0 + a) * (1.0 + 0.156 * a));
            let r2 = 1.0 + 0.06 * (nf - 8.0) * (1.0 + 0.12 * a) / nf;
            let r3 = 1.0 + 0.012 * b * (1.0 + 0.25 * a.abs()) / nf;
            z -= (1.0 - z) * r1 * r2 * r3;
        } else if i == 2 {
            let r1 = (1.67 + 0.28 * a) / (1.0 + 0.37 * a);
            let r2 = 1.0 + 0.22 * (nf - 8.0) / nf;
            let r3 = 1.0 + 8.0 * b / ((std::f64::consts::TAU + b) * nf * nf);
            z -= (x[0] - z) * r1 * r2 * r3;
        } else if i == n - 2 {
            let r1 = (1.0 + 0.235 * b) / (0.766 + 0.119 * b);
            let r2 = 1.0 / (1.0 + 0.639 * (nf - 4.0) / (1.0 + 0.71 * (nf - 4.0)));
            let r3 = 1.0 / (1.0 + 20.0 * a / ((7.5 + a) * nf * nf));
            z += (z - x[n - 4]) * r1 * r2 * r3;
        } else if i == n - 1 {
            let r1 = (1.0 + 0.37 * b) / (1.67 + 0.28 * b);
            let r2 = 1.0 / (1.0 + 0.22 * (nf - 8.0) / nf);
            let r3 = 1.0 / (1.0 + 8.0 * a / ((std::f64::consts::TAU + a) * nf * nf));
            z += (z - x[n - 3]) * r1 * r2 * r3;
        } else {
            z = 3.0 * x[i - 1] - 3.0 * x[i - 2] + x[i - 3];
        }
        let mut pp = 0.0;
        let mut p2 = 0.0;
        let mut temp = 0.0;
        for _ in 0..100 {
            temp = 2.0 + ab;
            let mut p1 = (a - b + temp * z) / 2.0;
            p2 = 1.0;
            for j in 2..=n {
                let jf = j as f64;
                let p3 = p2;
                p2 = p1;
                temp = 2.0 * jf + ab;
                let aa = 2.0 * jf * (jf + ab) * (temp - 2.0);
                let bb = (temp - 1.0) * (a * a - b * b + temp * (temp - 2.0) * z);
                let cc = 2.0 * (jf - 1.0 + a) * (jf - 1.0 + b) * temp;
                p1 = (bb * p2 - cc * p3) / aa;
            }
            pp = (nf * (a - b - temp * z) * p1 + 2.0 * (nf + a) * (nf + b) * p2)
                / (temp * (1.0 - z * z));
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-15 {
                break;
            }
        }
        x[i] = z;
        w[i] = (lg(a + nf) + lg(b + nf) - lg(nf + 1.0) - lg(nf + ab + 1.0)).exp()
            * temp
            * 2f64.powf(ab)
            / (pp * p2);
    }
    x.reverse();
    w.reverse();
    // Pin the zeroth moment; the log-gamma prefactor is only good to ~1e-14.
    let g = |v: f64| crate::specfun::gamma(v).expect("positive argument");
    let m0 = 2f64.powf(ab + 1.0) * g(a + 1.0) * g(b + 1.0) / g(ab + 2.0);
    let scale = m0 / w.iter().sum::<f64>();
    w.iter_mut().for_each(|v| *v *= scale);
    GaussRule {
        nodes: x,
        weights: w,
    }
}
