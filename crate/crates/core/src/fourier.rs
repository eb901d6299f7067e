//! Dynamics of the coefficients `ζ_k` for constant-coefficient nonlinear
//! equations `z^{(m)} = a_N z^N + ... + a_1 z + b_0`.
//!
//! In the falling-factorial basis the star power becomes an ordinary
//! convolution, so the lattice equation turns into the explicit map
//!
//! ```text
//! (n+m)!/n! · ζ_{n+m} = Σ_{j≥2} a_j (ζ^{⊛j})_n + a_1 ζ_n + b_0 δ_{n,0}
//! ```

use num_traits::Zero;

use crate::discretize::{NonlinearOde, PolyCoeff};
use crate::error::{Error, Result};
use crate::rational::{falling_factorial, recip_factorial, sign, int, Rational};
use crate::seq::{FourierSeq, TaylorCoeffs};

/// `z^{(m)} = a_N z^N + ... + a_1 z + b_0` with rational constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstNonlinearOde {
    deriv_order: usize,
    coeffs: Vec<Rational>,
    b0: Rational,
}

impl ConstNonlinearOde {
    /// `coeffs` holds `a_1, ..., a_N`.
    pub fn new(deriv_order: usize, coeffs: Vec<Rational>, b0: Rational) -> Result<Self> {
        if deriv_order == 0 {
            return Err(Error::InvalidEquation("derivative order m must be ≥ 1".into()));
        }
        Ok(Self {
            deriv_order,
            coeffs,
            b0,
        })
    }

    pub fn deriv_order(&self) -> usize {
        self.deriv_order
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_1, ..., a_N`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn b0(&self) -> &Rational {
        &self.b0
    }

    /// The same equation with polynomial (here constant) coefficients.
    pub fn to_nonlinear(&self) -> NonlinearOde {
        let coeffs = std::iter::once(&self.b0)
            .chain(&self.coeffs)
            .map(|a| PolyCoeff::constant(a.clone()))
            .collect();
        NonlinearOde::new(self.deriv_order, coeffs).expect("deriv_order checked at construction")
    }
}

/// `Σ_{l_1+...+l_{j-1} ≤ n} ζ_{l_1} ... ζ_{l_{j-1}} ζ_{n-l_1-...-l_{j-1}}`
/// by direct nested summation.
fn nested_convolution(zeta: &[Rational], j: usize, n: usize) -> Rational {
    if j == 1 {
        return zeta[n].clone();
    }
    let mut acc = Rational::zero();
    for l in 0..=n {
        if zeta[l].is_zero() {
            continue;
        }
        acc += &zeta[l] * nested_convolution(zeta, j - 1, n - l);
    }
    acc
}

/// Runs the coefficient map from `ζ_0, ..., ζ_{m-1}` through index `last`.
pub fn fourier_step(eq: &ConstNonlinearOde, zeta_init: &[Rational], last: usize) -> Result<FourierSeq> {
    let m = eq.deriv_order;
    if zeta_init.len() != m {
        return Err(Error::InvalidEquation(format!(
            "expected {m} initial coefficients, got {}",
            zeta_init.len()
        )));
    }
    if last + 1 < m {
        return Err(Error::IndexOutOfRange {
            index: last as i64,
            len: m,
        });
    }
    let mut zeta = zeta_init.to_vec();
    let mut n = 0;
    while n + m <= last {
        let mut rhs = if n == 0 { eq.b0.clone() } else { Rational::zero() };
        for (i, a) in eq.coeffs.iter().enumerate() {
            if !a.is_zero() {
                rhs += a * nested_convolution(&zeta, i + 1, n);
            }
        }
        let scale = falling_factorial((n + m) as u64, m as u64);
        zeta.push(rhs / scale);
        n += 1;
    }
    Ok(FourierSeq::new(zeta))
}

/// `Σ_{l≤n} Σ_{k≤l} (-1)^{n-l} b_k / ((n-l)! (l-k)!)`, evaluated literally.
/// Coefficients past the end of `b` count as zero.
pub fn fourier_solution(b: &TaylorCoeffs, n: usize) -> Rational {
    let mut acc = Rational::zero();
    for l in 0..=n {
        let outer = int(sign((n - l) as i64)) * recip_factorial((n - l) as i64);
        for k in 0..=l.min(b.len().saturating_sub(1)) {
            if b.is_empty() || b[k].is_zero() {
                continue;
            }
            acc += &outer * &b[k] * recip_factorial((l - k) as i64);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discretize::nonlin_step;
    use crate::rational::rat;
    use crate::transform::forward_transform;
    use num_traits::One;

    #[test]
    fn exponential_coefficients() {
        let eq = ConstNonlinearOde::new(1, vec![int(1)], int(0)).unwrap();
        let zeta = fourier_step(&eq, &[int(1)], 15).unwrap();
        for (k, v) in zeta.iter().enumerate() {
            assert_eq!(*v, recip_factorial(k as i64));
        }
    }

    #[test]
    fn square_gives_all_ones() {
        let eq = ConstNonlinearOde::new(1, vec![int(0), int(1)], int(0)).unwrap();
        let zeta = fourier_step(&eq, &[int(1)], 30).unwrap();
        assert!(zeta.iter().all(One::is_one));
        let z = nonlin_step(&eq.to_nonlinear(), &[int(1)], 30).unwrap();
        assert_eq!(forward_transform(&zeta), z);
    }

    #[test]
    fn zero_equation() {
        let eq = ConstNonlinearOde::new(2, vec![int(0); 3], int(0)).unwrap();
        let zeta = fourier_step(&eq, &[int(0), int(0)], 8).unwrap();
        assert!(zeta.is_all_zero());
    }

    #[test]
    fn inhomogeneous_constant_term_acts_at_origin_only() {
        let eq = ConstNonlinearOde::new(2, vec![rat(-1, 2), int(0), rat(1, 3)], int(2)).unwrap();
        let init = [rat(1, 2), int(-1)];
        let zeta = fourier_step(&eq, &init, 16).unwrap();
        let z = nonlin_step(&eq.to_nonlinear(), &forward_transform(&FourierSeq::new(init.to_vec())).into_vec(), 16).unwrap();
        assert_eq!(forward_transform(&zeta), z);
    }

    #[test]
    fn solution_formula_examples() {
        let c = rat(5, 7);
        assert_eq!(fourier_solution(&TaylorCoeffs::new(vec![c.clone(), int(0), int(0)]), 0), c);
        let b = TaylorCoeffs::new(vec![rat(2, 3), rat(-4, 5)]);
        assert_eq!(fourier_solution(&b, 1), rat(-4, 5));
        assert_eq!(fourier_solution(&b, 3), int(0));
    }
}
