//! Lattice analogs of polynomial-coefficient ODEs.
//!
//! A linear equation `Σ_l a_l(t) z^{(l)} + c_0(t) = 0` becomes
//!
//! ```text
//! Σ_l Σ_{(m,α) ∈ a_l} α · [t^m * Δ^l z]_n + Σ_r γ_r (n)_r = 0
//! ```
//!
//! and a nonlinear one `z^{(m)} = Σ_j a_j(t) z^j` becomes
//!
//! ```text
//! (Δ^m z)_n = Σ_{j≥1} Σ_{(m_j,α) ∈ a_j} α (n)_{m_j} (z^{*j})_{n-m_j} + Σ_r γ_r (n)_r
//! ```
//!
//! where `γ_r` are the coefficients of `a_0`. The image `z_n = Σ_k b_k (n)_k` of
//! any formal power series solution `Σ b_k t^k` satisfies these exactly.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{binomial, falling_factorial, int, recip_factorial, recip_factorial_table, sign, Rational};
use crate::seq::LatticeSeq;
use crate::star::{monomial_star_entry, star_power, MonomialForm, StarPath};
use crate::transform::{forward_entry, inverse_entry};

/// A polynomial coefficient `Σ α_m t^m`, stored sparsely with strictly
/// increasing powers and no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyCoeff {
    monomials: Vec<(usize, Rational)>,
}

impl PolyCoeff {
    /// Normalizes: merges repeated powers, drops zeros, sorts.
    pub fn new<I: IntoIterator<Item = (usize, Rational)>>(terms: I) -> Self {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (m, a) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += a;
        }
        Self {
            monomials: acc.into_iter().filter(|(_, a)| !a.is_zero()).collect(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new([(0, c)])
    }

    pub fn from_polynomial(p: &Polynomial) -> Self {
        Self::new(p.coeffs().iter().cloned().enumerate())
    }

    pub fn monomials(&self) -> &[(usize, Rational)] {
        &self.monomials
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Value at `t = 0`.
    pub fn constant_term(&self) -> Rational {
        match self.monomials.first() {
            Some((0, a)) => a.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.monomials.iter().all(|(m, _)| *m == 0)
    }

    /// Termwise lattice image `Σ γ_r (n)_r`.
    pub fn lattice_image(&self, n: usize) -> Rational {
        self.monomials
            .iter()
            .map(|(r, g)| g * falling_factorial(n as u64, *r as u64))
            .sum()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let deg = self.monomials.last().map_or(0, |(m, _)| *m);
        let mut v = vec![Rational::zero(); deg + 1];
        for (m, a) in &self.monomials {
            v[*m] = a.clone();
        }
        Polynomial::new(v)
    }
}

/// `a_N(t) z^{(N)} + ... + a_0(t) z + c_0(t) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOde {
    coeffs: Vec<PolyCoeff>,
    c0: PolyCoeff,
}

impl LinearOde {
    /// `coeffs` holds `a_0, ..., a_N` with `N ≥ 1` and `a_N ≠ 0`.
    pub fn new(coeffs: Vec<PolyCoeff>, c0: PolyCoeff) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidEquation("linear equation needs order N ≥ 1".into()));
        }
        if coeffs.last().is_some_and(PolyCoeff::is_zero) {
            return Err(Error::InvalidEquation("leading coefficient a_N is identically zero".into()));
        }
        Ok(Self { coeffs, c0 })
    }

    pub fn homogeneous(coeffs: Vec<PolyCoeff>) -> Result<Self> {
        Self::new(coeffs, PolyCoeff::zero())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[PolyCoeff] {
        &self.coeffs
    }

    pub fn c0(&self) -> &PolyCoeff {
        &self.c0
    }
}

/// `z^{(m)} = a_N(t) z^N + ... + a_1(t) z + a_0(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonlinearOde {
    deriv_order: usize,
    coeffs: Vec<PolyCoeff>,
}

impl NonlinearOde {
    /// `coeffs` holds `a_0, ..., a_N`. A vanishing `a_N` is accepted and
    /// simply lowers the effective degree.
    pub fn new(deriv_order: usize, coeffs: Vec<PolyCoeff>) -> Result<Self> {
        if deriv_order == 0 {
            return Err(Error::InvalidEquation("derivative order m must be ≥ 1".into()));
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidEquation("at least a_0 must be given".into()));
        }
        Ok(Self { deriv_order, coeffs })
    }

    pub fn deriv_order(&self) -> usize {
        self.deriv_order
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[PolyCoeff] {
        &self.coeffs
    }
}

/// `(Δ^l z)_idx = Σ_i (-1)^{l-i} C(l,i) z_{idx+i}`.
pub(crate) fn delta_power_entry(z: &[Rational], l: usize, idx: usize) -> Result<Rational> {
    if idx + l >= z.len() {
        return Err(Error::IndexOutOfRange {
            index: (idx + l) as i64,
            len: z.len(),
        });
    }
    let mut acc = Rational::zero();
    for i in 0..=l {
        let v = &z[idx + i];
        if v.is_zero() {
            continue;
        }
        let c = Rational::from_integer(binomial(l as u64, i as u64)) * int(sign((l - i) as i64));
        acc += c * v;
    }
    Ok(acc)
}

/// `l`-fold forward difference; the result is `l` entries shorter.
pub fn delta_power(z: &LatticeSeq, l: usize) -> Result<LatticeSeq> {
    if l >= z.len() {
        return Err(Error::OrderTooLarge { order: l, len: z.len() });
    }
    (0..z.len() - l)
        .map(|n| delta_power_entry(z.as_slice(), l, n))
        .collect::<Result<Vec<_>>>()
        .map(LatticeSeq::new)
}

fn require(z: &LatticeSeq, last: usize) -> Result<()> {
    if last >= z.len() {
        return Err(Error::IndexOutOfRange {
            index: last as i64,
            len: z.len(),
        });
    }
    Ok(())
}

/// Residual of the lattice linear equation at index `n`, using the shift
/// form for `t^m * Δ^l z`.
pub fn lin_residual(eq: &LinearOde, z: &LatticeSeq, n: usize) -> Result<Rational> {
    lin_residual_with(eq, z, n, MonomialForm::Shift)
}

/// [`lin_residual`] with a chosen formula for the monomial products.
pub fn lin_residual_with(
    eq: &LinearOde,
    z: &LatticeSeq,
    n: usize,
    form: MonomialForm,
) -> Result<Rational> {
    require(z, n + eq.order())?;
    let zs = z.as_slice();
    let mut acc = eq.c0.lattice_image(n);
    for (l, a) in eq.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = match form {
            MonomialForm::Shift => {
                let mut t = Rational::zero();
                for (m, alpha) in &a.monomials {
                    if n < *m {
                        continue;
                    }
                    let d = delta_power_entry(zs, l, n - m)?;
                    t += alpha * falling_factorial(n as u64, *m as u64) * d;
                }
                t
            }
            MonomialForm::Kernel => {
                let w: Vec<Rational> = (0..=n)
                    .map(|j| delta_power_entry(zs, l, j))
                    .collect::<Result<_>>()?;
                a.monomials
                    .iter()
                    .map(|(m, alpha)| alpha * monomial_star_entry(*m, &w, n, MonomialForm::Kernel))
                    .sum()
            }
        };
        acc += term;
    }
    Ok(acc)
}

/// Residuals at every admissible index `0 ..= L - N`.
pub fn lin_residuals(eq: &LinearOde, z: &LatticeSeq) -> Result<Vec<Rational>> {
    let n_max = checked_last(z.len(), eq.order())?;
    (0..=n_max).map(|n| lin_residual(eq, z, n)).collect()
}

fn checked_last(len: usize, order: usize) -> Result<usize> {
    len.checked_sub(order + 1).ok_or(Error::IndexOutOfRange {
        index: order as i64,
        len,
    })
}

/// Right-hand side of the nonlinear lattice equation at `n`, given star
/// powers `powers[j-1] = z^{*j}` valid through index `n`.
fn nonlin_rhs(eq: &NonlinearOde, powers: &[Vec<Rational>], n: usize) -> Rational {
    let mut acc = eq.coeffs[0].lattice_image(n);
    for (j, a) in eq.coeffs.iter().enumerate().skip(1) {
        for (m, alpha) in &a.monomials {
            if n < *m {
                continue;
            }
            acc += alpha * falling_factorial(n as u64, *m as u64) * &powers[j - 1][n - m];
        }
    }
    acc
}

/// Residual `(Δ^m z)_n - RHS_n` of the nonlinear lattice equation.
pub fn nonlin_residual(eq: &NonlinearOde, z: &LatticeSeq, n: usize) -> Result<Rational> {
    nonlin_residual_with(eq, z, n, StarPath::Convolution)
}

/// [`nonlin_residual`] with a chosen star-power route.
pub fn nonlin_residual_with(
    eq: &NonlinearOde,
    z: &LatticeSeq,
    n: usize,
    path: StarPath,
) -> Result<Rational> {
    require(z, n + eq.deriv_order)?;
    let prefix = z.prefix(n + 1)?;
    let powers = (1..=eq.degree())
        .map(|j| star_power(&prefix, j, path).map(LatticeSeq::into_vec))
        .collect::<Result<Vec<_>>>()?;
    let lhs = delta_power_entry(z.as_slice(), eq.deriv_order, n)?;
    Ok(lhs - nonlin_rhs(eq, &powers, n))
}

/// Residuals at every admissible index `0 ..= L - m`.
pub fn nonlin_residuals(eq: &NonlinearOde, z: &LatticeSeq) -> Result<Vec<Rational>> {
    let n_max = checked_last(z.len(), eq.deriv_order)?;
    let powers = (1..=eq.degree())
        .map(|j| star_power(z, j, StarPath::Convolution).map(LatticeSeq::into_vec))
        .collect::<Result<Vec<_>>>()?;
    (0..=n_max)
        .map(|n| {
            let lhs = delta_power_entry(z.as_slice(), eq.deriv_order, n)?;
            Ok(lhs - nonlin_rhs(eq, &powers, n))
        })
        .collect()
}

/// Solves the linear lattice equation forward from `z_0, ..., z_{N-1}`
/// through index `last`.
///
/// `z_{n+N}` enters the residual at `n` only through the local term
/// `a_N(0) Δ^N z_n`, so the recurrence is explicit whenever `a_N(0) ≠ 0`.
pub fn lin_step(eq: &LinearOde, init: &[Rational], last: usize) -> Result<LatticeSeq> {
    let order = eq.order();
    if init.len() != order {
        return Err(Error::InvalidEquation(format!(
            "expected {order} initial values, got {}",
            init.len()
        )));
    }
    let lead = eq.coeffs[order].constant_term();
    if lead.is_zero() {
        return Err(Error::NotForwardSolvable);
    }
    if last + 1 < order {
        return Err(Error::IndexOutOfRange {
            index: last as i64,
            len: order,
        });
    }
    let lead_inv = lead.recip();
    let mut z = LatticeSeq::new(init.to_vec());
    for n in 0..=(last + 1 - order) {
        if n + order > last {
            break;
        }
        let mut values = z.into_vec();
        values.push(Rational::zero());
        z = LatticeSeq::new(values);
        // residual is affine in z_{n+N} with slope a_N(0)
        let r = -lin_residual(eq, &z, n)? * &lead_inv;
        let mut values = z.into_vec();
        values[n + order] = r;
        z = LatticeSeq::new(values);
    }
    Ok(z)
}

/// Incrementally maintained star powers `z^{*1}, ..., z^{*N}` in the
/// falling-factorial basis.
struct StarTracker {
    rf: Vec<Rational>,
    z: Vec<Rational>,
    // pows[j][k]: coefficient k of z^{*(j+1)}
    pows: Vec<Vec<Rational>>,
}

impl StarTracker {
    fn new(degree: usize, capacity: usize) -> Self {
        Self {
            rf: recip_factorial_table(capacity),
            z: Vec::with_capacity(capacity),
            pows: vec![Vec::with_capacity(capacity); degree],
        }
    }

    fn push(&mut self, value: Rational) {
        let n = self.z.len();
        self.z.push(value);
        if self.pows.is_empty() {
            return;
        }
        let zeta_n = inverse_entry(&self.z, n, &self.rf);
        self.pows[0].push(zeta_n);
        for j in 1..self.pows.len() {
            let (lo, hi) = self.pows.split_at_mut(j);
            let prev = &lo[j - 1];
            let zeta = &lo[0];
            let mut acc = Rational::zero();
            for i in 0..=n {
                if prev[i].is_zero() || zeta[n - i].is_zero() {
                    continue;
                }
                acc += &prev[i] * &zeta[n - i];
            }
            hi[0].push(acc);
        }
    }

    /// `(z^{*j})_idx` for `idx` below the number of pushed values.
    fn value(&self, j: usize, idx: usize) -> Rational {
        forward_entry(&self.pows[j - 1], idx)
    }
}

/// Solves the nonlinear lattice equation forward from `z_0, ..., z_{m-1}`
/// through index `last`.
pub fn nonlin_step(eq: &NonlinearOde, init: &[Rational], last: usize) -> Result<LatticeSeq> {
    let m = eq.deriv_order;
    if init.len() != m {
        return Err(Error::InvalidEquation(format!(
            "expected {m} initial values, got {}",
            init.len()
        )));
    }
    if last + 1 < m {
        return Err(Error::IndexOutOfRange {
            index: last as i64,
            len: m,
        });
    }
    let mut tracker = StarTracker::new(eq.degree(), last + 1);
    for v in init {
        tracker.push(v.clone());
    }
    let mut n = 0;
    while n + m <= last {
        let mut rhs = eq.coeffs[0].lattice_image(n);
        for (j, a) in eq.coeffs.iter().enumerate().skip(1) {
            for (mj, alpha) in &a.monomials {
                if n < *mj {
                    continue;
                }
                rhs += alpha * falling_factorial(n as u64, *mj as u64) * tracker.value(j, n - mj);
            }
        }
        // Δ^m z_n = z_{n+m} + Σ_{i<m} (-1)^{m-i} C(m,i) z_{n+i}
        for i in 0..m {
            let c = Rational::from_integer(binomial(m as u64, i as u64)) * int(sign((m - i) as i64));
            rhs -= c * &tracker.z[n + i];
        }
        tracker.push(rhs);
        n += 1;
    }
    Ok(LatticeSeq::new(tracker.z))
}

/// Row `n` of the linear lattice equation written out as an affine form
/// `Σ_j weights[j] z_j + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRow {
    pub n: usize,
    pub weights: Vec<Rational>,
    pub constant: Rational,
}

impl LinearRow {
    pub fn eval(&self, z: &LatticeSeq) -> Result<Rational> {
        let mut acc = self.constant.clone();
        for (j, w) in self.weights.iter().enumerate() {
            if !w.is_zero() {
                acc += w * z.get(j as i64)?;
            }
        }
        Ok(acc)
    }
}

/// Explicit weights of row `n`; `weights` has length `n + N + 1`.
pub fn linear_recurrence_row(eq: &LinearOde, n: usize) -> LinearRow {
    let order = eq.order();
    let mut weights = vec![Rational::zero(); n + order + 1];
    for (l, a) in eq.coeffs.iter().enumerate() {
        for (m, alpha) in &a.monomials {
            if n < *m {
                continue;
            }
            let scale = alpha * falling_factorial(n as u64, *m as u64);
            for i in 0..=l {
                let c = Rational::from_integer(binomial(l as u64, i as u64)) * int(sign((l - i) as i64));
                weights[n - m + i] += &scale * c;
            }
        }
    }
    LinearRow {
        n,
        weights,
        constant: eq.c0.lattice_image(n),
    }
}

/// Row `n` of the nonlinear lattice equation `Δ^m z_n - RHS_n` as a
/// polynomial in the lattice values: keys are sorted index multisets
/// (the empty key is the constant term).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonlinearRow {
    pub n: usize,
    pub terms: BTreeMap<Vec<usize>, Rational>,
}

impl NonlinearRow {
    pub fn eval(&self, z: &LatticeSeq) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (key, c) in &self.terms {
            let mut t = c.clone();
            for &k in key {
                t *= z.get(k as i64)?;
            }
            acc += t;
        }
        Ok(acc)
    }
}

/// Explicit row `n` of the nonlinear equation, with the star powers
/// expanded through the closed kernel
/// `(z^{*j})_{n'} = n'! Σ_{Σk ≤ n'} (-1)^{Σk+n'} (j-1)^{n'-Σk} / (Πk! (n'-Σk)!) Π z_k`.
pub fn nonlinear_recurrence_row(eq: &NonlinearOde, n: usize) -> NonlinearRow {
    let mut terms: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    let m = eq.deriv_order;
    for i in 0..=m {
        let c = Rational::from_integer(binomial(m as u64, i as u64)) * int(sign((m - i) as i64));
        *terms.entry(vec![n + i]).or_insert_with(Rational::zero) += c;
    }
    let constant = eq.coeffs[0].lattice_image(n);
    *terms.entry(Vec::new()).or_insert_with(Rational::zero) -= constant;
    for (j, a) in eq.coeffs.iter().enumerate().skip(1) {
        for (mj, alpha) in &a.monomials {
            if n < *mj {
                continue;
            }
            let np = n - mj;
            let scale = -(alpha * falling_factorial(n as u64, *mj as u64));
            let mut ks = Vec::with_capacity(j);
            expand_power(j, np, &scale, &mut ks, &mut terms);
        }
    }
    terms.retain(|_, c| !c.is_zero());
    NonlinearRow { n, terms }
}

fn expand_power(
    arity: usize,
    np: usize,
    scale: &Rational,
    ks: &mut Vec<usize>,
    terms: &mut BTreeMap<Vec<usize>, Rational>,
) {
    let used: usize = ks.iter().sum();
    if ks.len() == arity {
        let r = np - used;
        let mut c = scale * falling_factorial(np as u64, np as u64)
            * crate::rational::pow_rat(&int(arity as i64 - 1), r as u64)
            * recip_factorial(r as i64)
            * int(sign((used + np) as i64));
        for &k in ks.iter() {
            c *= recip_factorial(k as i64);
        }
        let mut key = ks.clone();
        key.sort_unstable();
        *terms.entry(key).or_insert_with(Rational::zero) += c;
        return;
    }
    for k in 0..=(np - used) {
        ks.push(k);
        expand_power(arity, np, scale, ks, terms);
        ks.pop();
    }
}

/// Lattice value of the constant `1`, used by callers that need the unit
/// of the star product.
pub fn unit_sequence(len: usize) -> LatticeSeq {
    LatticeSeq::new(vec![Rational::one(); len])
}
