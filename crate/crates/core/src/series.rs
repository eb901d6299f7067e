//! Formal power series without constant term, under composition.
//!
//! A delta operator's symbol is such a series in `v` (with `T ~ e^v`); its
//! compositional inverse is the corresponding formal group exponential.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// `F(u) = c_1 u + c_2 u^2 + ... + c_D u^D`, stored as `[c_1, ..., c_D]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    coeffs: Vec<Rational>,
}

impl FormalSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    /// Truncation degree `D`.
    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `u^k` for `k >= 1`.
    pub fn coeff(&self, k: usize) -> Rational {
        if k == 0 {
            return Rational::zero();
        }
        self.coeffs.get(k - 1).cloned().unwrap_or_else(Rational::zero)
    }

    /// `self(inner(v))`, truncated to the smaller of the two degrees.
    pub fn compose(&self, inner: &FormalSeries) -> FormalSeries {
        let d = self.degree().min(inner.degree());
        FormalSeries::new(compose_to(&self.coeffs, &inner.coeffs, d))
    }
}

/// `Σ_k outer[k-1] inner(v)^k` through `v^d`; both slices hold `v^1..`.
fn compose_to(outer: &[Rational], inner: &[Rational], d: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); d];
    // power[i] is the coefficient of v^(i+1) in inner^k
    let mut power: Vec<Rational> = (0..d)
        .map(|i| inner.get(i).cloned().unwrap_or_else(Rational::zero))
        .collect();
    for k in 1..=d {
        if let Some(c) = outer.get(k - 1) {
            if !c.is_zero() {
                for (o, p) in out.iter_mut().zip(&power) {
                    *o += c * p;
                }
            }
        }
        if k == d {
            break;
        }
        // power <- power * inner; lowest degree rises to k+1
        let mut next = vec![Rational::zero(); d];
        for (i, p) in power.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, q) in inner.iter().enumerate() {
                let deg = i + j + 2;
                if deg > d {
                    break;
                }
                next[deg - 1] += p * q;
            }
        }
        power = next;
    }
    out
}

/// Compositional inverse: the series `G` with `F(G(v)) = v` through the
/// truncation degree of `F`.
pub fn series_inverse(f: &FormalSeries) -> Result<FormalSeries> {
    let d = f.degree();
    let c1 = f.coeff(1);
    if c1.is_zero() {
        return Err(Error::NotInvertible);
    }
    let c1_inv = c1.recip();
    let mut g = vec![Rational::zero(); d];
    g[0] = c1_inv.clone();
    for n in 2..=d {
        // with g_n still zero, [v^n] F(G) collects every contribution except c_1 g_n
        let partial = compose_to(&f.coeffs, &g, n);
        g[n - 1] = -&partial[n - 1] * &c1_inv;
    }
    Ok(FormalSeries::new(g))
}
