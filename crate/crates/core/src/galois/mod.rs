//! Constant-coefficient linear equations and their lattice fundamental
//! systems.
//!
//! `y^{(N)} + a_{N-1} y^{(N-1)} + ... + a_0 y = 0` and
//! `Δ^N z + a_{N-1} Δ^{N-1} z + ... + a_0 z = 0` share the characteristic
//! polynomial `T(λ)`. The generator `t^j e^{λt}` of the continuous solution
//! space maps to `z_n = (n)_j (1+λ)^{n-j}`, and the modified Wronskian
//! `det[Δ^i z^{(k)}]` certifies that the images stay independent.

mod roots;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::discretize::{delta_power_entry, LinearOde, PolyCoeff};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{binomial, falling_factorial, pow_rat, sign, to_f64, Rational};
use crate::seq::LatticeSeq;

pub use roots::{polynomial_roots, Root, RootDatum, FLOAT_ROOT_TOL};

/// Bound on the relative residual of float-root generators.
pub const FLOAT_RESIDUAL_TOL: f64 = 1e-9;

/// Monic `y^{(N)} + a_{N-1} y^{(N-1)} + ... + a_0 y = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstLinearEq {
    coeffs: Vec<Rational>,
}

impl ConstLinearEq {
    /// `coeffs` holds `a_0, ..., a_{N-1}`; the order is their count.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidEquation("order N must be ≥ 1".into()));
        }
        Ok(Self { coeffs })
    }

    /// The monic equation whose characteristic roots are `roots`.
    pub fn from_roots(roots: &[Rational]) -> Result<Self> {
        let p = roots.iter().fold(Polynomial::one(), |acc, r| {
            &acc * &Polynomial::new(vec![-r.clone(), Rational::one()])
        });
        let n = roots.len();
        Self::new((0..n).map(|k| p.coeff(k)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `T(λ) = λ^N + a_{N-1} λ^{N-1} + ... + a_0`.
    pub fn charpoly(&self) -> Polynomial {
        let mut c = self.coeffs.clone();
        c.push(Rational::one());
        Polynomial::new(c)
    }

    pub fn to_linear_ode(&self) -> LinearOde {
        let coeffs = self
            .coeffs
            .iter()
            .cloned()
            .chain(std::iter::once(Rational::one()))
            .map(PolyCoeff::constant)
            .collect();
        LinearOde::homogeneous(coeffs).expect("monic leading coefficient")
    }

    /// `(T[Δ] z)_n`.
    pub fn residual(&self, z: &LatticeSeq, n: usize) -> Result<Rational> {
        let zs = z.as_slice();
        let mut acc = delta_power_entry(zs, self.order(), n)?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc += a * delta_power_entry(zs, i, n)?;
            }
        }
        Ok(acc)
    }

    /// `|(T[Δ] z)_n|` relative to `max(1, max_k |z_k|)` over the entries it reads.
    pub fn residual_f64(&self, z: &[f64], n: usize) -> f64 {
        let order = self.order();
        let window = &z[n..=n + order];
        let scale = window.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        let mut acc = delta_f64(z, order, n);
        for (i, a) in self.coeffs.iter().enumerate() {
            acc += to_f64(a) * delta_f64(z, i, n);
        }
        acc.abs() / scale
    }
}

fn delta_f64(z: &[f64], l: usize, n: usize) -> f64 {
    (0..=l)
        .map(|i| {
            let c = binomial(l as u64, i as u64);
            let c: f64 = num_traits::ToPrimitive::to_f64(&c).unwrap_or(f64::INFINITY);
            c * sign((l - i) as i64) as f64 * z[n + i]
        })
        .sum()
}

/// Characteristic roots of `eq` with multiplicities.
pub fn char_roots(eq: &ConstLinearEq) -> Vec<RootDatum> {
    polynomial_roots(&eq.charpoly())
}

/// Image of `t^j e^{λt}`: `z_n = (n)_j (1+λ)^{n-j}` for `n = 0..=last`.
pub fn map_solution(lambda: &Rational, j: usize, last: usize) -> LatticeSeq {
    let base = Rational::one() + lambda;
    (0..=last)
        .map(|n| {
            if n < j {
                Rational::zero()
            } else {
                falling_factorial(n as u64, j as u64) * pow_rat(&base, (n - j) as u64)
            }
        })
        .collect()
}

/// Which real combination of a conjugate pair a generator carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairPart {
    /// Coefficient of `√disc`, e.g. the sine part.
    Surd,
    /// Rational part, e.g. the cosine part.
    Rational,
}

/// One member of a lattice fundamental system.
#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    /// `(n)_j (1+λ)^{n-j}`.
    Rational { lambda: Rational, j: usize },
    /// `(n)_j` times one part of `(1 + center + √disc)^{n-j}`.
    Quadratic {
        center: Rational,
        disc: Rational,
        j: usize,
        part: PairPart,
    },
    /// `(n)_j` times the real or imaginary part of `(1+λ)^{n-j}`.
    Float {
        lambda: Complex64,
        j: usize,
        part: PairPart,
    },
}

/// Values of a generator on `0..=last`.
#[derive(Clone, Debug, PartialEq)]
pub enum Sequence {
    Exact(LatticeSeq),
    Float(Vec<f64>),
}

impl Generator {
    pub fn is_exact(&self) -> bool {
        !matches!(self, Generator::Float { .. })
    }

    pub fn sequence(&self, last: usize) -> Sequence {
        match self {
            Generator::Rational { lambda, j } => Sequence::Exact(map_solution(lambda, *j, last)),
            Generator::Quadratic {
                center,
                disc,
                j,
                part,
            } => {
                let base = (Rational::one() + center, Rational::one());
                let mut pw = (Rational::one(), Rational::zero());
                let mut powers = Vec::with_capacity(last + 1);
                for _ in 0..=last {
                    powers.push(pw.clone());
                    pw = surd_mul(&pw, &base, disc);
                }
                let values = (0..=last)
                    .map(|n| {
                        if n < *j {
                            return Rational::zero();
                        }
                        let (r, s) = &powers[n - j];
                        let v = match part {
                            PairPart::Rational => r,
                            PairPart::Surd => s,
                        };
                        falling_factorial(n as u64, *j as u64) * v
                    })
                    .collect();
                Sequence::Exact(values)
            }
            Generator::Float { .. } => Sequence::Float(self.float_sequence(last)),
        }
    }

    /// Values as floats, whatever the generator kind.
    pub fn float_sequence(&self, last: usize) -> Vec<f64> {
        match self {
            Generator::Float { lambda, j, part } => {
                let base = Complex64::new(1.0, 0.0) + lambda;
                (0..=last)
                    .map(|n| {
                        if n < *j {
                            return 0.0;
                        }
                        let ff: f64 = (0..*j).map(|i| (n - i) as f64).product();
                        let w = base.powu((n - j) as u32) * ff;
                        match part {
                            PairPart::Rational => w.re,
                            PairPart::Surd => w.im,
                        }
                    })
                    .collect()
            }
            _ => match self.sequence(last) {
                Sequence::Exact(z) => z.iter().map(to_f64).collect(),
                Sequence::Float(v) => v,
            },
        }
    }
}

/// `(a + b√d)(c + e√d)` as (rational part, surd coefficient).
fn surd_mul(x: &(Rational, Rational), y: &(Rational, Rational), d: &Rational) -> (Rational, Rational) {
    (
        &x.0 * &y.0 + d * &x.1 * &y.1,
        &x.0 * &y.1 + &x.1 * &y.0,
    )
}

/// The mapped generators of a constant-coefficient equation.
#[derive(Clone, Debug, PartialEq)]
pub struct FundamentalSystem {
    generators: Vec<Generator>,
}

impl FundamentalSystem {
    pub fn new(generators: Vec<Generator>) -> Self {
        Self { generators }
    }

    /// One generator per root and power `j < μ`; a conjugate pair gives its
    /// surd part then its rational part.
    pub fn from_roots(roots: &[RootDatum]) -> Self {
        let mut generators = Vec::new();
        for datum in roots {
            for j in 0..datum.multiplicity {
                match &datum.root {
                    Root::Rational(lambda) => generators.push(Generator::Rational {
                        lambda: lambda.clone(),
                        j,
                    }),
                    Root::Quadratic { center, disc } => {
                        for part in [PairPart::Surd, PairPart::Rational] {
                            generators.push(Generator::Quadratic {
                                center: center.clone(),
                                disc: disc.clone(),
                                j,
                                part,
                            });
                        }
                    }
                    Root::Float { value, .. } => {
                        let tol = 1e-9 * (1.0 + value.norm());
                        if value.im > tol {
                            for part in [PairPart::Surd, PairPart::Rational] {
                                generators.push(Generator::Float {
                                    lambda: *value,
                                    j,
                                    part,
                                });
                            }
                        } else if value.im.abs() <= tol {
                            generators.push(Generator::Float {
                                lambda: Complex64::new(value.re, 0.0),
                                j,
                                part: PairPart::Rational,
                            });
                        }
                    }
                }
            }
        }
        Self { generators }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.generators.iter().all(Generator::is_exact)
    }
}

/// A modified Wronskian, exact when every generator is.
#[derive(Clone, Debug, PartialEq)]
pub enum WronskianValue {
    Exact(Rational),
    Float(f64),
}

impl WronskianValue {
    pub fn is_zero(&self) -> bool {
        match self {
            WronskianValue::Exact(r) => r.is_zero(),
            WronskianValue::Float(v) => *v == 0.0,
        }
    }
}

/// `det[(Δ^i z^{(k)})_{n0}]` for `i, k < N`, with `N = solutions.len()`.
pub fn casoratian(solutions: &[LatticeSeq], n0: usize) -> Result<Rational> {
    let n = solutions.len();
    let mut m = Vec::with_capacity(n);
    for i in 0..n {
        let row = solutions
            .iter()
            .map(|z| delta_power_entry(z.as_slice(), i, n0))
            .collect::<Result<Vec<_>>>()?;
        m.push(row);
    }
    Ok(det_exact(m))
}

fn det_exact(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        let (top, bottom) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in bottom {
            if row[col].is_zero() {
                continue;
            }
            let f = &row[col] / &p;
            for (x, pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &f * pv;
            }
        }
    }
    det
}

fn det_f64(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .expect("nonempty range");
        if m[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        let p = m[col][col];
        det *= p;
        let (top, bottom) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in bottom {
            let f = row[col] / p;
            for (x, pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * pv;
            }
        }
    }
    det
}

/// Modified Wronskian of `sys` at `n0`; an exactly vanishing determinant is
/// reported as [`Error::SingularSystem`].
pub fn modified_wronskian(sys: &FundamentalSystem, n0: usize) -> Result<WronskianValue> {
    let n = sys.len();
    let last = n0 + n;
    if sys.is_exact() {
        let seqs: Vec<LatticeSeq> = sys
            .generators
            .iter()
            .map(|g| match g.sequence(last) {
                Sequence::Exact(z) => z,
                Sequence::Float(_) => unreachable!("exact system"),
            })
            .collect();
        let det = casoratian(&seqs, n0)?;
        if det.is_zero() {
            return Err(Error::SingularSystem);
        }
        return Ok(WronskianValue::Exact(det));
    }
    let seqs: Vec<Vec<f64>> = sys.generators.iter().map(|g| g.float_sequence(last)).collect();
    let m = (0..n)
        .map(|i| seqs.iter().map(|z| delta_f64(z, i, n0)).collect())
        .collect();
    let det = det_f64(m);
    if det == 0.0 {
        return Err(Error::SingularSystem);
    }
    Ok(WronskianValue::Float(det))
}

/// Outcome of checking that the mapped roots give a lattice fundamental system.
#[derive(Clone, Debug, PartialEq)]
pub struct FundamentalReport {
    pub order: usize,
    pub roots: Vec<RootDatum>,
    pub system: FundamentalSystem,
    /// Whether every exact generator has identically zero residual.
    pub exact_residuals_zero: bool,
    /// Largest relative residual among float generators (0 if none).
    pub max_float_residual: f64,
    /// `None` when the determinant vanishes.
    pub wronskian: Option<WronskianValue>,
}

impl FundamentalReport {
    pub fn dimension(&self) -> usize {
        self.system.len()
    }

    pub fn is_exact(&self) -> bool {
        self.system.is_exact()
    }

    pub fn passed(&self) -> bool {
        self.dimension() == self.order
            && self.exact_residuals_zero
            && self.max_float_residual < FLOAT_RESIDUAL_TOL
            && self.wronskian.is_some()
    }
}

/// Builds the fundamental system of `eq` and checks `T[Δ] z = 0` for
/// `n = 0..=last-N` together with the Wronskian at `n0 = 0`.
pub fn verify_fundamental(eq: &ConstLinearEq, last: usize) -> Result<FundamentalReport> {
    let order = eq.order();
    let last = last.max(order);
    let roots = char_roots(eq);
    let system = FundamentalSystem::from_roots(&roots);
    let mut exact_residuals_zero = true;
    let mut max_float_residual = 0.0f64;
    for g in system.generators() {
        match g.sequence(last) {
            Sequence::Exact(z) => {
                for n in 0..=last - order {
                    if !eq.residual(&z, n)?.is_zero() {
                        exact_residuals_zero = false;
                    }
                }
            }
            Sequence::Float(z) => {
                for n in 0..=last - order {
                    max_float_residual = max_float_residual.max(eq.residual_f64(&z, n));
                }
            }
        }
    }
    let wronskian = match modified_wronskian(&system, 0) {
        Ok(w) => Some(w),
        Err(Error::SingularSystem) => None,
        Err(e) => return Err(e),
    };
    Ok(FundamentalReport {
        order,
        roots,
        system,
        exact_residuals_zero,
        max_float_residual,
        wronskian,
    })
}

/// The constant sequence `c` on `0..=last`.
pub fn constant_sequence(c: &Rational, last: usize) -> LatticeSeq {
    LatticeSeq::new(vec![c.clone(); last + 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::{apply_stencil, DeltaStencil};
    use crate::discretize::lin_residual;
    use crate::rational::{int, rat, recip_factorial};
    use crate::seq::TaylorCoeffs;
    use crate::transform::taylor_to_lattice;

    fn eq(c: &[i64]) -> ConstLinearEq {
        ConstLinearEq::new(c.iter().map(|&v| int(v)).collect()).unwrap()
    }

    #[test]
    fn root_examples() {
        let r = char_roots(&eq(&[-1, 0]));
        assert_eq!(r.len(), 2);
        assert!(r.contains(&RootDatum { root: Root::Rational(int(1)), multiplicity: 1 }));
        assert!(r.contains(&RootDatum { root: Root::Rational(int(-1)), multiplicity: 1 }));
        assert_eq!(char_roots(&eq(&[0, 0])), vec![RootDatum { root: Root::Rational(int(0)), multiplicity: 2 }]);
        assert_eq!(
            char_roots(&eq(&[1, 0])),
            vec![RootDatum { root: Root::Quadratic { center: int(0), disc: int(-1) }, multiplicity: 1 }]
        );
    }

    #[test]
    fn map_solution_examples() {
        assert_eq!(map_solution(&int(0), 0, 5), LatticeSeq::from_ints([1; 6]));
        assert_eq!(map_solution(&int(1), 0, 6), LatticeSeq::from_ints([1, 2, 4, 8, 16, 32, 64]));
        assert_eq!(map_solution(&int(0), 1, 4), LatticeSeq::from_ints([0, 1, 2, 3, 4]));
    }

    #[test]
    fn map_solution_is_taylor_image() {
        let lambda = rat(-2, 3);
        for j in 0..3 {
            let b: TaylorCoeffs = (0..15i64)
                .map(|k| if k < j { int(0) } else { pow_rat(&lambda, (k - j) as u64) * recip_factorial(k - j) })
                .collect();
            assert_eq!(map_solution(&lambda, j as usize, 14), taylor_to_lattice(&b, 14).unwrap());
        }
    }

    #[test]
    fn eigen_relation() {
        let lambda = rat(5, 4);
        let z = map_solution(&lambda, 0, 12);
        for n in 0..12 {
            assert_eq!(delta_power_entry(z.as_slice(), 1, n).unwrap(), &lambda * &z[n]);
        }
    }

    #[test]
    fn harmonic_system_matches_sine_and_cosine() {
        let sys = FundamentalSystem::from_roots(&char_roots(&eq(&[1, 0])));
        let Sequence::Exact(s) = sys.generators()[0].sequence(6) else { panic!() };
        let Sequence::Exact(c) = sys.generators()[1].sequence(6) else { panic!() };
        assert_eq!(s, LatticeSeq::from_ints([0, 1, 2, 2, 0, -4, -8]));
        assert_eq!(c, LatticeSeq::from_ints([1, 1, 0, -2, -4, -4, 0]));
        assert_eq!(modified_wronskian(&sys, 0).unwrap(), WronskianValue::Exact(int(-1)));
    }

    #[test]
    fn wronskian_examples() {
        let one = FundamentalSystem::new(vec![Generator::Rational { lambda: int(1), j: 0 }]);
        assert_eq!(modified_wronskian(&one, 0).unwrap(), WronskianValue::Exact(int(1)));
        let sys = FundamentalSystem::from_roots(&char_roots(&eq(&[0, 0])));
        assert_eq!(modified_wronskian(&sys, 0).unwrap(), WronskianValue::Exact(int(1)));
        let dup = FundamentalSystem::new(vec![Generator::Rational { lambda: int(2), j: 0 }; 2]);
        assert_eq!(modified_wronskian(&dup, 0), Err(Error::SingularSystem));
    }

    #[test]
    fn verify_examples() {
        let h = verify_fundamental(&eq(&[1, 0]), 20).unwrap();
        assert!(h.passed() && h.is_exact());
        assert_eq!(h.wronskian, Some(WronskianValue::Exact(int(-1))));
        let e = verify_fundamental(&eq(&[-1]), 20).unwrap();
        assert!(e.passed());
        assert_eq!(e.dimension(), 1);
        let triple = verify_fundamental(&eq(&[0, 0, 0]), 20).unwrap();
        assert!(triple.passed());
        let Sequence::Exact(z) = triple.system.generators()[2].sequence(5) else { panic!() };
        assert_eq!(z, LatticeSeq::from_ints([0, 0, 2, 6, 12, 20]));
    }

    #[test]
    fn surd_and_repeated_pairs_verify_exactly() {
        // (λ^2 - 2)^2 (λ^2 + λ + 1)
        let p = &(&Polynomial::new(vec![int(-2), int(0), int(1)]) * &Polynomial::new(vec![int(-2), int(0), int(1)]))
            * &Polynomial::new(vec![int(1), int(1), int(1)]);
        let e = ConstLinearEq::new(p.coeffs()[..6].to_vec()).unwrap();
        let r = verify_fundamental(&e, 16).unwrap();
        assert!(r.is_exact());
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn float_roots_verify_to_tolerance() {
        // λ^3 - 2 has one real and two complex irrational roots
        let r = verify_fundamental(&eq(&[-2, 0, 0]), 20).unwrap();
        assert!(!r.is_exact());
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn constants_correspondence() {
        let e = eq(&[3, -1, 2]);
        let c = constant_sequence(&rat(7, 2), 6);
        for n in 0..3 {
            assert_eq!(e.residual(&c, n).unwrap(), int(3) * rat(7, 2));
        }
    }

    #[test]
    fn agrees_with_general_linear_residual() {
        let e = eq(&[2, -3]);
        let ode = e.to_linear_ode();
        let z: LatticeSeq = (0..10).map(|k| rat(k * k + 1, k + 3)).collect();
        for n in 0..8 {
            assert_eq!(e.residual(&z, n).unwrap(), lin_residual(&ode, &z, n).unwrap());
        }
    }

    #[test]
    fn symmetric_stencil_has_two_geometric_solutions_per_eigenvalue() {
        // (r - 1/r)/2 = 3/4 has r = 2 and r = -1/2
        let lambda = rat(3, 4);
        let sym = DeltaStencil::symmetric();
        let a: LatticeSeq = (0..12).map(|n| pow_rat(&int(2), n)).collect();
        let b: LatticeSeq = (0..12).map(|n| pow_rat(&rat(-1, 2), n)).collect();
        for n in 1..11 {
            assert_eq!(apply_stencil(&sym, &a, n).unwrap(), &lambda * &a[n as usize]);
            assert_eq!(apply_stencil(&sym, &b, n).unwrap(), &lambda * &b[n as usize]);
        }
        assert!(!casoratian(&[a, b], 0).unwrap().is_zero());
    }
}
