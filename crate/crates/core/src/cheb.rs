//! Chebyshev interpolation on a single panel (second-kind points, barycentric form).

use crate::real::Real;

#[derive(Debug, Clone)]
pub struct ChebPanel<T> {
    lo: T,
    hi: T,
    nodes: Vec<T>,
    weights: Vec<T>,
    values: Vec<T>,
}

/// Second-kind Chebyshev points mapped to `[lo, hi]`, in increasing order.
pub fn cheb_points<T: Real>(lo: T, hi: T, n: usize) -> Vec<T> {
    assert!(n >= 2, "need at least two Chebyshev points");
    let half = T::lit(0.5);
    let mid = half * (lo + hi);
    let rad = half * (hi - lo);
    (0..n)
        .map(|j| {
            let k = n - 1 - j;
            let x = (T::PI() * T::from_usize_lossy(k) / T::from_usize_lossy(n - 1)).cos();
            if j == 0 {
                lo
            } else if j == n - 1 {
                hi
            } else {
                mid + rad * x
            }
        })
        .collect()
}

impl<T: Real> ChebPanel<T> {
    /// Samples `f` at `n` Chebyshev points on `[lo, hi]`.
    pub fn sample<F: FnMut(T) -> T>(lo: T, hi: T, n: usize, mut f: F) -> Self {
        let nodes = cheb_points(lo, hi, n);
        let values = nodes.iter().map(|&x| f(x)).collect();
        Self::from_values(lo, hi, nodes, values)
    }

    /// Fallible variant of [`ChebPanel::sample`].
    pub fn try_sample<E, F: FnMut(T) -> Result<T, E>>(
        lo: T,
        hi: T,
        n: usize,
        mut f: F,
    ) -> Result<Self, E> {
        let nodes = cheb_points(lo, hi, n);
        let mut values = Vec::with_capacity(n);
        for &x in &nodes {
            values.push(f(x)?);
        }
        Ok(Self::from_values(lo, hi, nodes, values))
    }

    fn from_values(lo: T, hi: T, nodes: Vec<T>, values: Vec<T>) -> Self {
        let n = nodes.len();
        let weights = (0..n)
            .map(|j| {
                let s = if j % 2 == 0 { T::one() } else { -T::one() };
                if j == 0 || j == n - 1 {
                    s * T::lit(0.5)
                } else {
                    s
                }
            })
            .collect();
        Self {
            lo,
            hi,
            nodes,
            weights,
            values,
        }
    }

    pub fn lo(&self) -> T {
        self.lo
    }

    pub fn hi(&self) -> T {
        self.hi
    }

    pub fn nodes(&self) -> &[T] {
        &self.nodes
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn eval(&self, x: T) -> T {
        let mut num = T::zero();
        let mut den = T::zero();
        for ((&xj, &wj), &fj) in self.nodes.iter().zip(&self.weights).zip(&self.values) {
            let d = x - xj;
            if d == T::zero() {
                return fj;
            }
            let c = wj / d;
            num += c * fj;
            den += c;
        }
        num / den
    }
}
