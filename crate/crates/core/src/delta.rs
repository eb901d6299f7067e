//! Finite-difference delta operators `Q = (1/σ) Σ_{k=l}^{m} α_k T^k` and
//! their basic polynomial sequences.
//!
//! A stencil is a delta operator when `Σ α_k = 0` and `Σ k α_k = 1`; its
//! order is read off the symbol `(1/σ) Σ α_k e^{kσv} = v + O(v^{p+1})`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{int, pow_rat, rat, recip_factorial, Rational};
use crate::seq::LatticeSeq;
use crate::series::FormalSeries;

/// Shift-operator stencil with spacing `σ` and weights `α_l, ..., α_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaStencil {
    sigma: Rational,
    lower: i64,
    alphas: Vec<Rational>,
}

impl DeltaStencil {
    /// Builds a stencil without validating it; see [`validate_stencil`].
    pub fn new(sigma: Rational, lower: i64, alphas: Vec<Rational>) -> Self {
        Self { sigma, lower, alphas }
    }

    /// `Δ = T - 1`.
    pub fn forward() -> Self {
        Self::new(int(1), 0, vec![int(-1), int(1)])
    }

    /// `Δ⁻ = 1 - T⁻¹`.
    pub fn backward() -> Self {
        Self::new(int(1), -1, vec![int(-1), int(1)])
    }

    /// `(T - T⁻¹)/2`.
    pub fn symmetric() -> Self {
        Self::new(int(1), -1, vec![rat(-1, 2), int(0), rat(1, 2)])
    }

    pub fn sigma(&self) -> &Rational {
        &self.sigma
    }

    /// `l`
    pub fn lower(&self) -> i64 {
        self.lower
    }

    /// `m`
    pub fn upper(&self) -> i64 {
        self.lower + self.alphas.len() as i64 - 1
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    /// `(k, α_k)` pairs for `k = l..=m`.
    pub fn weights(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.alphas
            .iter()
            .enumerate()
            .map(move |(i, a)| (self.lower + i as i64, a))
    }

    fn check_shape(&self) -> Result<()> {
        if self.alphas.len() < 2 {
            return Err(Error::NotADeltaOperator("stencil needs l < m".into()));
        }
        if !self.sigma.is_positive() {
            return Err(Error::NotADeltaOperator(format!(
                "lattice spacing must be positive, got {}",
                self.sigma
            )));
        }
        if self.alphas[0].is_zero() || self.alphas[self.alphas.len() - 1].is_zero() {
            return Err(Error::NotADeltaOperator(
                "end weights α_l and α_m must be nonzero".into(),
            ));
        }
        Ok(())
    }

    fn check_constraints(&self) -> Result<()> {
        self.check_shape()?;
        let sum: Rational = self.alphas.iter().sum();
        if !sum.is_zero() {
            return Err(Error::ConstraintViolation(format!("Σ α_k = {sum}, expected 0")));
        }
        let first: Rational = self.weights().map(|(k, a)| a * int(k)).sum();
        if !first.is_one() {
            return Err(Error::ConstraintViolation(format!("Σ k α_k = {first}, expected 1")));
        }
        Ok(())
    }

    /// Coefficient of `v^j` in the symbol `(1/σ) Σ α_k e^{kσv}`:
    /// `σ^{j-1} Σ α_k k^j / j!`.
    fn symbol_coeff(&self, j: u32) -> Rational {
        let moment: Rational = self
            .weights()
            .map(|(k, a)| a * pow_rat(&int(k), j as u64))
            .sum();
        let scale = if j == 0 {
            self.sigma.recip()
        } else {
            pow_rat(&self.sigma, j as u64 - 1)
        };
        moment * scale * recip_factorial(j as i64)
    }

    /// `(Q p)(x) = (1/σ) Σ α_k p(x + kσ)`.
    pub fn apply_to_polynomial(&self, p: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for (k, a) in self.weights() {
            if a.is_zero() {
                continue;
            }
            let shifted = p.shift(&(&self.sigma * int(k)));
            acc = &acc + &shifted.scale(a);
        }
        acc.scale(&self.sigma.recip())
    }
}

impl fmt::Display for DeltaStencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1/{})[", self.sigma)?;
        for (i, (k, a)) in self.weights().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}·T^{k}")?;
        }
        write!(f, "]")
    }
}

/// Checks the delta-operator constraints and returns the approximation
/// order `p ≤ max_order` with symbol `v + O(v^{p+1})`.
pub fn validate_stencil(s: &DeltaStencil, max_order: u32) -> Result<u32> {
    s.check_constraints()?;
    if !s.symbol_coeff(1).is_one() {
        return Err(Error::NotADeltaOperator("symbol is not v + O(v^2)".into()));
    }
    let mut order = 1;
    for j in 2..=max_order {
        if !s.symbol_coeff(j).is_zero() {
            break;
        }
        order = j;
    }
    Ok(order)
}

/// Symbol of the stencil through `v^degree`, as a formal series.
pub fn symbol_series(s: &DeltaStencil, degree: usize) -> Result<FormalSeries> {
    s.check_constraints()?;
    Ok(FormalSeries::new(
        (1..=degree as u32).map(|j| s.symbol_coeff(j)).collect(),
    ))
}

/// `(1/σ) Σ_k α_k z_{n+k}`.
pub fn apply_stencil(s: &DeltaStencil, z: &LatticeSeq, n: i64) -> Result<Rational> {
    let mut acc = Rational::zero();
    for (k, a) in s.weights() {
        let v = z.get(n + k)?;
        if !a.is_zero() {
            acc += a * v;
        }
    }
    Ok(acc / &s.sigma)
}

/// The polynomials `q_0, ..., q_D` with `q_0 = 1`, `q_n(0) = 0` and
/// `Q q_n = n q_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSequence {
    polys: Vec<Polynomial>,
}

impl BasicSequence {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> Option<&Polynomial> {
        self.polys.get(n)
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }
}

/// Basic sequence of a validated stencil, by a triangular solve over
/// monomial coefficients degree by degree.
pub fn basic_sequence(s: &DeltaStencil, max_degree: usize) -> Result<BasicSequence> {
    s.check_constraints()?;
    // images[i] = Q(x^i), a polynomial of degree i-1 with leading coefficient i
    let images: Vec<Polynomial> = (0..=max_degree)
        .map(|i| s.apply_to_polynomial(&Polynomial::monomial(Rational::one(), i)))
        .collect();

    let mut polys = vec![Polynomial::one()];
    for n in 1..=max_degree {
        let target = polys[n - 1].scale(&Rational::from_integer(BigInt::from(n)));
        let mut c = vec![Rational::zero(); n + 1];
        // row r of Q q_n only involves c_{r+1}..c_n
        for r in (0..n).rev() {
            let mut rhs = target.coeff(r);
            for (i, ci) in c.iter().enumerate().skip(r + 2) {
                if !ci.is_zero() {
                    rhs -= ci * images[i].coeff(r);
                }
            }
            c[r + 1] = rhs / images[r + 1].coeff(r);
        }
        polys.push(Polynomial::new(c));
    }
    Ok(BasicSequence { polys })
}
