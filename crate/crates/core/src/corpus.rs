//! Classical example equations with known power-series solutions, packaged
//! so that every solution can be mapped to the lattice and checked.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::discretize::{
    lin_residuals, lin_step, linear_recurrence_row, nonlin_residuals, nonlin_step, LinearOde,
    NonlinearOde, PolyCoeff,
};
use crate::error::{Error, Result};
use crate::rational::{
    binomial, falling_factorial_rat, int, is_nonpositive_integer, pochhammer, pow_rat, rat,
    recip_factorial, Rational,
};
use crate::seq::{LatticeSeq, TaylorCoeffs};
use crate::transform::taylor_to_lattice;

/// Largest index `n` at which residuals are checked by [`all_cases`] reports.
pub const DEFAULT_RANGE: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseEquation {
    Linear(LinearOde),
    Nonlinear(NonlinearOde),
}

impl CaseEquation {
    /// Number of lattice values beyond `n` that row `n` reads.
    pub fn order(&self) -> usize {
        match self {
            CaseEquation::Linear(eq) => eq.order(),
            CaseEquation::Nonlinear(eq) => eq.deriv_order(),
        }
    }
}

type TaylorFn = dyn Fn(usize) -> Result<TaylorCoeffs> + Send + Sync;

/// A power-series solution, produced to any requested length.
#[derive(Clone)]
pub struct KnownSolution {
    label: String,
    taylor: Arc<TaylorFn>,
}

impl KnownSolution {
    pub fn new<F>(label: impl Into<String>, taylor: F) -> Self
    where
        F: Fn(usize) -> Result<TaylorCoeffs> + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            taylor: Arc::new(taylor),
        }
    }

    /// A polynomial solution, zero-padded as needed.
    pub fn polynomial(label: impl Into<String>, coeffs: TaylorCoeffs) -> Self {
        Self::new(label, move |len| coeffs.zero_padded(len.max(coeffs.len())).prefix(len))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The first `len` Taylor coefficients.
    pub fn taylor(&self, len: usize) -> Result<TaylorCoeffs> {
        (self.taylor)(len)
    }

    /// Lattice image on `0..=last`.
    pub fn lattice(&self, last: usize) -> Result<LatticeSeq> {
        taylor_to_lattice(&self.taylor(last + 1)?, last)
    }
}

impl fmt::Debug for KnownSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KnownSolution").field("label", &self.label).finish_non_exhaustive()
    }
}

/// A textbook equation, its known solutions and its parameters.
#[derive(Clone, Debug)]
pub struct CorpusCase {
    pub name: String,
    pub parameters: Vec<(String, Rational)>,
    pub eq: CaseEquation,
    pub solutions: Vec<KnownSolution>,
    /// Expected local recurrence `Σ_i w_i z_{n+i}` for constant-coefficient cases.
    pub closed_stencil: Option<Vec<Rational>>,
    /// Printed Jacobi formula, evaluated next to the normative solution.
    pub printed: Option<PrintedJacobi>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedJacobi {
    pub m: usize,
    pub alpha: Rational,
    pub beta: Rational,
}

/// Residual scan of one solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    pub label: String,
    pub lattice: LatticeSeq,
    pub residuals: Vec<Rational>,
    /// Whether forward stepping from the first values reproduces the image;
    /// `None` when the equation cannot be stepped.
    pub stepping_matches: Option<bool>,
}

impl SolutionReport {
    pub fn residuals_vanish(&self) -> bool {
        self.residuals.iter().all(Zero::is_zero)
    }

    pub fn passed(&self) -> bool {
        self.residuals_vanish() && self.stepping_matches != Some(false)
    }
}

/// Side-by-side comparison of the printed Jacobi formula with the normative
/// lattice polynomial. Reported, never asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedComparison {
    pub printed: LatticeSeq,
    pub agrees: bool,
    pub residual_vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub name: String,
    pub parameters: Vec<(String, Rational)>,
    pub n_max: usize,
    pub solutions: Vec<SolutionReport>,
    pub stencil_matches: Option<bool>,
    pub printed: Option<PrintedComparison>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.solutions.iter().all(SolutionReport::passed) && self.stencil_matches != Some(false)
    }
}

impl CorpusCase {
    /// Checks every known solution for `n = 0..=n_max`, plus the closed
    /// stencil and stepping where they apply.
    pub fn verify(&self, n_max: usize) -> Result<CaseReport> {
        let last = n_max + self.eq.order();
        let mut solutions = Vec::with_capacity(self.solutions.len());
        for sol in &self.solutions {
            let z = sol.lattice(last)?;
            let (residuals, stepped) = match &self.eq {
                CaseEquation::Linear(eq) => {
                    let stepped = if eq.coeffs()[eq.order()].constant_term().is_zero() {
                        None
                    } else {
                        Some(lin_step(eq, &z.as_slice()[..eq.order()], last)?)
                    };
                    (lin_residuals(eq, &z)?, stepped)
                }
                CaseEquation::Nonlinear(eq) => {
                    let m = eq.deriv_order();
                    (nonlin_residuals(eq, &z)?, Some(nonlin_step(eq, &z.as_slice()[..m], last)?))
                }
            };
            solutions.push(SolutionReport {
                label: sol.label.clone(),
                stepping_matches: stepped.map(|s| s == z),
                lattice: z,
                residuals,
            });
        }
        let stencil_matches = match (&self.closed_stencil, &self.eq) {
            (Some(w), CaseEquation::Linear(eq)) => Some((0..=n_max).all(|n| {
                let row = linear_recurrence_row(eq, n);
                row.constant.is_zero()
                    && row.weights.iter().enumerate().all(|(j, v)| {
                        let expected = j
                            .checked_sub(n)
                            .and_then(|i| w.get(i))
                            .cloned()
                            .unwrap_or_else(Rational::zero);
                        *v == expected
                    })
            })),
            _ => None,
        };
        let printed = match (&self.printed, &self.eq) {
            (Some(p), CaseEquation::Linear(eq)) => {
                let printed: LatticeSeq = (0..=last)
                    .map(|n| jacobi_printed(p.m, &p.alpha, &p.beta, n))
                    .collect::<Result<_>>()?;
                let residual_vanishes = lin_residuals(eq, &printed)?.iter().all(Zero::is_zero);
                let agrees = solutions.first().is_some_and(|s| s.lattice == printed);
                Some(PrintedComparison {
                    printed,
                    agrees,
                    residual_vanishes,
                })
            }
            _ => None,
        };
        Ok(CaseReport {
            name: self.name.clone(),
            parameters: self.parameters.clone(),
            n_max,
            solutions,
            stencil_matches,
            printed,
        })
    }
}

fn pc(terms: &[(usize, Rational)]) -> PolyCoeff {
    PolyCoeff::new(terms.iter().cloned())
}

/// Taylor coefficients of the real parts of `e^{(c+√d)t}`: the rational part
/// and the coefficient of `√d` in `(c+√d)^k / k!`.
fn surd_exponential(center: &Rational, disc: &Rational, len: usize) -> (TaylorCoeffs, TaylorCoeffs) {
    let mut rational = Vec::with_capacity(len);
    let mut surd = Vec::with_capacity(len);
    let (mut r, mut s) = (Rational::one(), Rational::zero());
    for k in 0..len {
        let f = recip_factorial(k as i64);
        rational.push(&r * &f);
        surd.push(&s * &f);
        (r, s) = (&r * center + disc * &s, &r + &s * center);
    }
    (TaylorCoeffs::new(rational), TaylorCoeffs::new(surd))
}

fn oscillator_solutions(center: Rational, disc: Rational) -> Vec<KnownSolution> {
    let (c2, d2) = (center.clone(), disc.clone());
    vec![
        KnownSolution::new("sine-like", move |len| Ok(surd_exponential(&center, &disc, len).1)),
        KnownSolution::new("cosine-like", move |len| Ok(surd_exponential(&c2, &d2, len).0)),
    ]
}

/// `z'' + ω² z = 0` with solutions `sin(ωt)/ω` and `cos(ωt)`.
pub fn harmonic_case(omega: Rational) -> CorpusCase {
    let w2 = &omega * &omega;
    let eq = LinearOde::homogeneous(vec![pc(&[(0, w2.clone())]), PolyCoeff::zero(), pc(&[(0, int(1))])])
        .expect("leading coefficient is 1");
    CorpusCase {
        name: "harmonic".into(),
        parameters: vec![("omega".into(), omega)],
        eq: CaseEquation::Linear(eq),
        solutions: oscillator_solutions(Rational::zero(), -w2.clone()),
        closed_stencil: Some(vec![w2 + int(1), int(-2), int(1)]),
        printed: None,
    }
}

/// `z'' + 2qω z' + ω² z = 0` for `q ≤ 1`.
pub fn damped_case(omega: Rational, q: Rational) -> Result<CorpusCase> {
    if q > int(1) {
        return Err(Error::InvalidEquation("damped oscillator needs q ≤ 1".into()));
    }
    let w2 = &omega * &omega;
    let qw = &q * &omega;
    let eq = LinearOde::homogeneous(vec![
        pc(&[(0, w2.clone())]),
        pc(&[(0, int(2) * &qw)]),
        pc(&[(0, int(1))]),
    ])
    .expect("leading coefficient is 1");
    // λ = -qω ± ω√(q²-1)
    let disc = &w2 * (&q * &q - int(1));
    Ok(CorpusCase {
        name: "damped".into(),
        parameters: vec![("omega".into(), omega), ("q".into(), q)],
        eq: CaseEquation::Linear(eq),
        solutions: oscillator_solutions(-qw.clone(), disc),
        closed_stencil: Some(vec![
            &w2 - int(2) * &qw + int(1),
            int(2) * (&qw - int(1)),
            int(1),
        ]),
        printed: None,
    })
}

/// `z' + t z = 0` with solution `e^{-t²/2}`.
pub fn gaussian_case() -> CorpusCase {
    let eq = LinearOde::homogeneous(vec![pc(&[(1, int(1))]), pc(&[(0, int(1))])]).expect("a_1 = 1");
    CorpusCase {
        name: "gaussian".into(),
        parameters: Vec::new(),
        eq: CaseEquation::Linear(eq),
        solutions: vec![KnownSolution::new("exp(-t^2/2)", |len| {
            Ok((0..len)
                .map(|k| {
                    if k % 2 == 1 {
                        Rational::zero()
                    } else {
                        let j = (k / 2) as u64;
                        pow_rat(&rat(-1, 2), j) * recip_factorial(j as i64)
                    }
                })
                .collect())
        })],
        closed_stencil: None,
        printed: None,
    }
}

fn check_pochhammer_denominator(c: &Rational) -> Result<()> {
    if is_nonpositive_integer(c) {
        return Err(Error::PochhammerPole(format!("(c)_k vanishes for c = {c}")));
    }
    Ok(())
}

/// Taylor coefficients `(a)_k (b)_k / ((c)_k k!)` of `₂F₁(a, b; c; t)`.
pub fn hypergeometric_taylor(a: &Rational, b: &Rational, c: &Rational, len: usize) -> Result<TaylorCoeffs> {
    let mut out = Vec::with_capacity(len);
    let mut term = Rational::one();
    for k in 0..len {
        out.push(term.clone());
        let ck = c + int(k as i64);
        if ck.is_zero() {
            if k + 1 < len {
                return Err(Error::PochhammerPole(format!("(c)_{} vanishes for c = {c}", k + 1)));
            }
            break;
        }
        term = term * (a + int(k as i64)) * (b + int(k as i64)) / (ck * int(k as i64 + 1));
    }
    Ok(TaylorCoeffs::new(out))
}

/// Finite Gauss sum `Σ_{k≤n} (a)_k (b)_k / ((c)_k k!) · (n)_k`, the lattice
/// image of `₂F₁(a, b; c; t)`.
pub fn gauss_sum(n: usize, a: &Rational, b: &Rational, c: &Rational) -> Result<Rational> {
    Ok(taylor_to_lattice(&hypergeometric_taylor(a, b, c, n + 1)?, n)?[n].clone())
}

/// `t(1-t) z'' + (c - (a+b+1) t) z' - ab z = 0` with solution `₂F₁(a, b; c; t)`.
pub fn hypergeometric_case(a: Rational, b: Rational, c: Rational) -> Result<CorpusCase> {
    check_pochhammer_denominator(&c)?;
    let eq = LinearOde::homogeneous(vec![
        pc(&[(0, -(&a * &b))]),
        pc(&[(0, c.clone()), (1, -(&a + &b + int(1)))]),
        pc(&[(1, int(1)), (2, int(-1))]),
    ])
    .expect("a_2 = t - t^2");
    let (a2, b2, c2) = (a.clone(), b.clone(), c.clone());
    Ok(CorpusCase {
        name: "hypergeometric".into(),
        parameters: vec![("a".into(), a), ("b".into(), b), ("c".into(), c)],
        eq: CaseEquation::Linear(eq),
        solutions: vec![KnownSolution::new("2F1(a,b;c;t)", move |len| {
            hypergeometric_taylor(&a2, &b2, &c2, len)
        })],
        closed_stencil: None,
        printed: None,
    })
}

/// Taylor coefficients of `-(k+1) / (t^{k+1} + c_1 + k c_2)`.
pub fn riccati_taylor(k: usize, c1: &Rational, c2: &Rational, len: usize) -> Result<TaylorCoeffs> {
    let mut d = vec![Rational::zero(); len.max(k + 2)];
    d[0] = c1 + int(k as i64) * c2;
    d[k + 1] = Rational::one();
    let recip = TaylorCoeffs::new(d).reciprocal(len)?;
    Ok(recip.scaled(&int(-(k as i64) - 1)))
}

/// `z' = t^k z²` with the family `-(k+1)/(t^{k+1} + c_1 + k c_2)`.
pub fn riccati_case(k: usize, c1: Rational, c2: Rational) -> Result<CorpusCase> {
    if (&c1 + int(k as i64) * &c2).is_zero() {
        return Err(Error::SingularAtOrigin);
    }
    let eq = NonlinearOde::new(1, vec![PolyCoeff::zero(), PolyCoeff::zero(), pc(&[(k, int(1))])])
        .expect("m = 1");
    let (c1s, c2s) = (c1.clone(), c2.clone());
    Ok(CorpusCase {
        name: "riccati".into(),
        parameters: vec![("k".into(), int(k as i64)), ("c1".into(), c1), ("c2".into(), c2)],
        eq: CaseEquation::Nonlinear(eq),
        solutions: vec![KnownSolution::new("-(k+1)/(t^(k+1)+c1+k c2)", move |len| {
            riccati_taylor(k, &c1s, &c2s, len)
        })],
        closed_stencil: None,
        printed: None,
    })
}

/// Coefficients of the probabilists' Hermite polynomial `He_m`.
pub fn hermite_coeffs(m: usize) -> TaylorCoeffs {
    let mut c = vec![Rational::zero(); m + 1];
    for i in 0..=m / 2 {
        let v = Rational::from_integer(binomial(m as u64, 2 * i as u64))
            * pochhammer(&rat(1, 2), i as u64)
            * pow_rat(&int(-2), i as u64);
        c[m - 2 * i] = v;
    }
    TaylorCoeffs::new(c)
}

/// `z'' - t z' + m z = 0` with solution `He_m`.
pub fn hermite_case(m: usize) -> CorpusCase {
    let eq = LinearOde::homogeneous(vec![
        pc(&[(0, int(m as i64))]),
        pc(&[(1, int(-1))]),
        pc(&[(0, int(1))]),
    ])
    .expect("a_2 = 1");
    CorpusCase {
        name: "hermite".into(),
        parameters: vec![("m".into(), int(m as i64))],
        eq: CaseEquation::Linear(eq),
        solutions: vec![KnownSolution::polynomial("He_m", hermite_coeffs(m))],
        closed_stencil: None,
        printed: None,
    }
}

fn check_gamma(arg: Rational, what: &str) -> Result<()> {
    if is_nonpositive_integer(&arg) {
        return Err(Error::GammaPole(format!("Γ({what}) with argument {arg}")));
    }
    Ok(())
}

fn check_jacobi(m: usize, alpha: &Rational, beta: &Rational) -> Result<()> {
    let mi = int(m as i64);
    check_gamma(alpha + &mi + int(1), "α+m+1")?;
    check_gamma(alpha + beta + &mi + int(1), "α+β+m+1")?;
    for k in 0..=m {
        let ki = int(k as i64);
        check_gamma(alpha + beta + &mi + &ki + int(1), "α+β+m+k+1")?;
        check_gamma(alpha + &ki + int(1), "α+k+1")?;
    }
    Ok(())
}

/// Coefficients in `t` of the Jacobi polynomial
/// `P_m^{(α,β)}(t) = (1/m!) Σ_k C(m,k) (α+k+1)_{m-k} (α+β+m+1)_k ((t-1)/2)^k`.
pub fn jacobi_coeffs(m: usize, alpha: &Rational, beta: &Rational) -> Result<TaylorCoeffs> {
    check_jacobi(m, alpha, beta)?;
    let mut c = vec![Rational::zero(); m + 1];
    let ab = alpha + beta + int(m as i64 + 1);
    for k in 0..=m {
        let outer = Rational::from_integer(binomial(m as u64, k as u64))
            * pochhammer(&(alpha + int(k as i64 + 1)), (m - k) as u64)
            * pochhammer(&ab, k as u64)
            * pow_rat(&rat(1, 2), k as u64)
            * recip_factorial(m as i64);
        // (t-1)^k = Σ_i C(k,i) t^i (-1)^{k-i}
        for (i, ci) in c.iter_mut().enumerate().take(k + 1) {
            let s = if (k - i) % 2 == 0 { int(1) } else { int(-1) };
            *ci += &outer * Rational::from_integer(binomial(k as u64, i as u64)) * s;
        }
    }
    Ok(TaylorCoeffs::new(c))
}

/// The printed lattice Jacobi formula at `n`, with `(n-1)!/(n-k-1)!` read as
/// the falling factorial `(n-1)_k`:
/// `(1/m!) Σ_k C(m,k) (α+β+m+1)_k 2^{-k} (n-1)_k`.
pub fn jacobi_printed(m: usize, alpha: &Rational, beta: &Rational, n: usize) -> Result<Rational> {
    check_jacobi(m, alpha, beta)?;
    let ab = alpha + beta + int(m as i64 + 1);
    let x = int(n as i64 - 1);
    let mut acc = Rational::zero();
    for k in 0..=m {
        acc += Rational::from_integer(binomial(m as u64, k as u64))
            * pochhammer(&ab, k as u64)
            * pow_rat(&rat(1, 2), k as u64)
            * falling_factorial_rat(&x, k as u64);
    }
    Ok(acc * recip_factorial(m as i64))
}

/// `(1-t²) z'' + (β - α - (α+β+2) t) z' + m(m+α+β+1) z = 0` with solution
/// `P_m^{(α,β)}`.
pub fn jacobi_case(m: usize, alpha: Rational, beta: Rational) -> Result<CorpusCase> {
    let coeffs = jacobi_coeffs(m, &alpha, &beta)?;
    let mi = int(m as i64);
    let eq = LinearOde::homogeneous(vec![
        pc(&[(0, &mi * (&mi + &alpha + &beta + int(1)))]),
        pc(&[(0, &beta - &alpha), (1, -(&alpha + &beta + int(2)))]),
        pc(&[(0, int(1)), (2, int(-1))]),
    ])
    .expect("a_2 = 1 - t^2");
    Ok(CorpusCase {
        name: "jacobi".into(),
        parameters: vec![("m".into(), mi), ("alpha".into(), alpha.clone()), ("beta".into(), beta.clone())],
        eq: CaseEquation::Linear(eq),
        solutions: vec![KnownSolution::polynomial("P_m^(alpha,beta)", coeffs)],
        closed_stencil: None,
        printed: Some(PrintedJacobi { m, alpha, beta }),
    })
}

/// The standard suite.
pub fn all_cases() -> Vec<CorpusCase> {
    let mut cases = vec![
        harmonic_case(int(1)),
        harmonic_case(rat(2, 3)),
        harmonic_case(int(0)),
        damped_case(int(1), rat(1, 2)).expect("q ≤ 1"),
        damped_case(rat(3, 2), int(1)).expect("q ≤ 1"),
        damped_case(int(2), rat(-1, 4)).expect("q ≤ 1"),
        gaussian_case(),
        hypergeometric_case(rat(1, 2), rat(1, 3), rat(5, 4)).expect("c not a pole"),
        hypergeometric_case(int(-3), rat(2, 5), rat(7, 2)).expect("c not a pole"),
        riccati_case(0, int(-1), int(0)).expect("nonzero at origin"),
        riccati_case(1, int(-2), int(0)).expect("nonzero at origin"),
        riccati_case(1, rat(3, 2), rat(-1, 2)).expect("nonzero at origin"),
        riccati_case(2, int(1), rat(1, 3)).expect("nonzero at origin"),
    ];
    cases.extend((0..=6).map(hermite_case));
    for m in 0..=4 {
        cases.push(jacobi_case(m, rat(1, 2), rat(-1, 3)).expect("no pole"));
    }
    cases.push(jacobi_case(3, int(0), int(0)).expect("no pole"));
    cases
}

/// Runs [`all_cases`] at [`DEFAULT_RANGE`].
pub fn run_all() -> Result<Vec<CaseReport>> {
    run_all_to(DEFAULT_RANGE)
}

/// Runs [`all_cases`], checking residuals for `n = 0..=n_max`.
pub fn run_all_to(n_max: usize) -> Result<Vec<CaseReport>> {
    use rayon::prelude::*;
    all_cases().par_iter().map(|c| c.verify(n_max)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harmonic_examples() {
        let case = harmonic_case(int(1));
        assert_eq!(case.closed_stencil, Some(vec![int(2), int(-2), int(1)]));
        let r = case.verify(20).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.stencil_matches, Some(true));
        assert_eq!(&r.solutions[0].lattice.as_slice()[..5], &[int(0), int(1), int(2), int(2), int(0)]);
    }

    #[test]
    fn degenerations() {
        let w = rat(5, 3);
        let h = harmonic_case(w.clone());
        let d = damped_case(w, int(0)).unwrap();
        for (a, b) in h.solutions.iter().zip(&d.solutions) {
            assert_eq!(a.taylor(12).unwrap(), b.taylor(12).unwrap());
        }
        let z = harmonic_case(int(0));
        assert_eq!(z.solutions[0].lattice(5).unwrap(), LatticeSeq::from_ints(0..6));
        assert_eq!(z.solutions[1].lattice(5).unwrap(), LatticeSeq::from_ints([1; 6]));
        assert!(damped_case(int(1), rat(3, 2)).is_err());
    }

    #[test]
    fn gaussian_values() {
        let z = gaussian_case().solutions[0].lattice(4).unwrap();
        assert_eq!(&z.as_slice()[..3], &[int(1), int(1), int(0)]);
    }

    #[test]
    fn gauss_sum_examples() {
        let (a, b, c) = (rat(1, 2), rat(1, 3), rat(5, 4));
        assert_eq!(gauss_sum(0, &a, &b, &c).unwrap(), int(1));
        assert_eq!(gauss_sum(1, &a, &b, &c).unwrap(), int(1) + &a * &b / &c);
        assert!(matches!(gauss_sum(3, &a, &b, &int(-1)), Err(Error::PochhammerPole(_))));
        assert!(hypergeometric_case(a, b, int(0)).is_err());
    }

    #[test]
    fn riccati_examples() {
        let z = riccati_case(0, int(-1), int(0)).unwrap().solutions[0].lattice(4).unwrap();
        assert_eq!(z, LatticeSeq::from_ints([1, 2, 5, 16, 65]));
        let b = riccati_taylor(1, &int(-2), &int(0), 5).unwrap();
        assert_eq!(b[0], int(1));
        assert_eq!(riccati_case(2, int(2), int(-1)).unwrap_err(), Error::SingularAtOrigin);
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite_coeffs(2), TaylorCoeffs::from_ints([-1, 0, 1]));
        assert_eq!(hermite_coeffs(3), TaylorCoeffs::from_ints([0, -3, 0, 1]));
        assert_eq!(hermite_coeffs(4), TaylorCoeffs::from_ints([3, 0, -6, 0, 1]));
        let z = hermite_case(2).solutions[0].lattice(6).unwrap();
        let expect: LatticeSeq = (0..7i64).map(|n| int(n * n - n - 1)).collect();
        assert_eq!(z, expect);
        assert_eq!(hermite_case(0).solutions[0].lattice(3).unwrap(), LatticeSeq::from_ints([1; 4]));
    }

    #[test]
    fn jacobi_reduces_to_legendre() {
        // P_2 = (3t^2 - 1)/2
        assert_eq!(jacobi_coeffs(2, &int(0), &int(0)).unwrap(), TaylorCoeffs::new(vec![rat(-1, 2), int(0), rat(3, 2)]));
        assert!(matches!(jacobi_coeffs(2, &int(-3), &int(0)), Err(Error::GammaPole(_))));
    }

    #[test]
    fn every_case_verifies() {
        for r in run_all().unwrap() {
            assert!(r.passed(), "{}: {:?}", r.name, r.parameters);
        }
    }
}
