//! Roots of rational polynomials, exact where possible.
//!
//! The pipeline is: square-free decomposition, rational roots, exact
//! quadratics, then Durand–Kerner on whatever is left. Rational quadratic
//! factors hiding in the float roots are recovered and certified by exact
//! division.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Polynomial;
use crate::rational::{rat, small_divisors, to_f64, Rational};

/// Residual bound below which a float root counts as certified.
pub const FLOAT_ROOT_TOL: f64 = 1e-12;

const MAX_CANDIDATES: usize = 200_000;

/// A root, or conjugate pair of roots, of a characteristic polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum Root {
    Rational(Rational),
    /// The pair `center ± √disc`, with `disc` not the square of a rational.
    Quadratic { center: Rational, disc: Rational },
    /// Numerical root with its scaled residual `|p(λ)| / Σ|c_i||λ|^i`.
    Float { value: Complex64, residual: f64 },
}

impl Root {
    pub fn is_exact(&self) -> bool {
        !matches!(self, Root::Float { .. })
    }

    /// Numerical value; for a quadratic pair, the member with `+√disc`.
    pub fn to_complex(&self) -> Complex64 {
        match self {
            Root::Rational(r) => Complex64::new(to_f64(r), 0.0),
            Root::Quadratic { center, disc } => {
                let c = to_f64(center);
                let d = to_f64(disc);
                if d >= 0.0 {
                    Complex64::new(c + d.sqrt(), 0.0)
                } else {
                    Complex64::new(c, (-d).sqrt())
                }
            }
            Root::Float { value, .. } => *value,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootDatum {
    pub root: Root,
    pub multiplicity: usize,
}

impl RootDatum {
    /// Number of roots represented, counted with multiplicity.
    pub fn count(&self) -> usize {
        match self.root {
            Root::Quadratic { .. } => 2 * self.multiplicity,
            _ => self.multiplicity,
        }
    }
}

/// All roots of `p` (degree ≥ 1) with multiplicities summing to its degree.
pub fn polynomial_roots(p: &Polynomial) -> Vec<RootDatum> {
    let mut out = Vec::new();
    for (factor, mult) in square_free(p) {
        for root in square_free_roots(&factor) {
            out.push(RootDatum {
                root,
                multiplicity: mult,
            });
        }
    }
    out
}

/// Yun's algorithm: `p = c Π f_i^i` with each `f_i` monic and square-free.
pub(crate) fn square_free(p: &Polynomial) -> Vec<(Polynomial, usize)> {
    let f = p.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_rem(&a0).0;
    let c = df.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let b_next = b.div_rem(&a).0;
        let c_next = d.div_rem(&a).0;
        d = &c_next - &b_next.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        b = b_next;
        i += 1;
    }
    out
}

fn square_free_roots(g: &Polynomial) -> Vec<Root> {
    let (rats, rest) = rational_roots(g);
    let mut out: Vec<Root> = rats.into_iter().map(Root::Rational).collect();
    match rest.degree() {
        None | Some(0) => {}
        Some(1) => out.push(Root::Rational(-rest.coeff(0) / rest.coeff(1))),
        Some(2) => out.push(quadratic_pair(&rest)),
        Some(_) => out.extend(high_degree_roots(&rest)),
    }
    out
}

/// Rational roots by the rational root theorem, and the deflated cofactor.
fn rational_roots(g: &Polynomial) -> (Vec<Rational>, Polynomial) {
    let mut rest = g.monic();
    let mut roots = Vec::new();
    if rest.coeff(0).is_zero() {
        roots.push(Rational::zero());
        rest = rest.div_rem(&Polynomial::x()).0;
    }
    if rest.degree().unwrap_or(0) == 0 {
        return (roots, rest);
    }
    let ints = integer_coeffs(&rest);
    let (Some(ps), Some(qs)) = (
        small_divisors(&ints[0]),
        small_divisors(ints.last().expect("nonempty")),
    ) else {
        return (roots, rest);
    };
    if ps.len() * qs.len() > MAX_CANDIDATES {
        return (roots, rest);
    }
    for p in &ps {
        for q in &qs {
            if !p.gcd(q).is_one() {
                continue;
            }
            for s in [1, -1] {
                let r = Rational::new(p * s, q.clone());
                if rest.degree().unwrap_or(0) > 0 && rest.eval(&r).is_zero() {
                    let lin = Polynomial::new(vec![-r.clone(), Rational::one()]);
                    rest = rest.div_rem(&lin).0;
                    roots.push(r);
                }
            }
        }
    }
    (roots, rest)
}

/// Primitive integer multiple of `p`'s coefficients.
fn integer_coeffs(p: &Polynomial) -> Vec<BigInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

/// Roots `center ± √disc` of a monic quadratic with no rational roots.
fn quadratic_pair(q: &Polynomial) -> Root {
    let q = q.monic();
    let center = -q.coeff(1) / Rational::from_integer(2.into());
    let disc = &center * &center - q.coeff(0);
    Root::Quadratic { center, disc }
}

fn high_degree_roots(g: &Polynomial) -> Vec<Root> {
    let mut rest = g.monic();
    let mut floats = durand_kerner(&rest);
    let mut out = Vec::new();
    'search: loop {
        for i in 0..floats.len() {
            for j in (i + 1)..floats.len() {
                let s = floats[i] + floats[j];
                let p = floats[i] * floats[j];
                let tol = 1e-8 * (1.0 + s.norm() + p.norm());
                if s.im.abs() > tol || p.im.abs() > tol {
                    continue;
                }
                let (Some(s), Some(p)) = (approx_rational(s.re), approx_rational(p.re)) else {
                    continue;
                };
                let cand = Polynomial::new(vec![p, -s, Rational::one()]);
                let (quot, rem) = rest.div_rem(&cand);
                if rem.is_zero() {
                    out.push(quadratic_pair(&cand));
                    rest = quot;
                    floats.remove(j);
                    floats.remove(i);
                    continue 'search;
                }
            }
        }
        break;
    }
    match rest.degree() {
        Some(1) => out.push(Root::Rational(-rest.coeff(0))),
        Some(2) => out.push(quadratic_pair(&rest)),
        _ => {
            let c: Vec<f64> = rest.coeffs().iter().map(to_f64).collect();
            out.extend(floats.into_iter().map(|value| Root::Float {
                value,
                residual: scaled_residual(&c, value),
            }));
        }
    }
    out
}

/// `|p(λ)| / Σ|c_i||λ|^i` for ascending coefficients `c`.
pub(crate) fn scaled_residual(c: &[f64], x: Complex64) -> f64 {
    let mut val = Complex64::zero();
    let mut scale = 0.0;
    for a in c.iter().rev() {
        val = val * x + a;
        scale = scale * x.norm() + a.abs();
    }
    if scale == 0.0 {
        0.0
    } else {
        val.norm() / scale
    }
}

fn horner(c: &[f64], x: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::zero(), |acc, a| acc * x + a)
}

/// Simultaneous iteration for all roots of a monic polynomial, followed by
/// Newton polishing.
fn durand_kerner(p: &Polynomial) -> Vec<Complex64> {
    let c: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    let d = c.len() - 1;
    let dc: Vec<f64> = (1..=d).map(|k| k as f64 * c[k]).collect();
    let bound = 1.0 + c[..d].iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32) * bound).collect();
    for _ in 0..2000 {
        let mut change = 0.0f64;
        for i in 0..d {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                continue;
            }
            let step = horner(&c, z[i]) / denom;
            z[i] -= step;
            change = change.max(step.norm());
        }
        if change < 1e-15 * bound {
            break;
        }
    }
    for r in &mut z {
        for _ in 0..8 {
            let dv = horner(&dc, *r);
            if dv.norm() == 0.0 {
                break;
            }
            let step = horner(&c, *r) / dv;
            *r -= step;
            if step.norm() < 1e-17 * (1.0 + r.norm()) {
                break;
            }
        }
    }
    z
}

/// Best continued-fraction approximation with denominator ≤ 10^4, accepted
/// only when it matches `x` to near machine precision.
fn approx_rational(x: f64) -> Option<Rational> {
    const MAX_DEN: i128 = 10_000;
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    let tol = 1e-11 * x.abs().max(1.0);
    let (mut h0, mut h1, mut k0, mut k1) = (0i128, 1i128, 1i128, 0i128);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        let ai = a as i128;
        let h = ai * h1 + h0;
        let k = ai * k1 + k0;
        if k > MAX_DEN {
            break;
        }
        (h0, h1, k0, k1) = (h1, h, k1, k);
        if (x - h1 as f64 / k1 as f64).abs() < tol {
            return Some(rat(h1 as i64, k1 as i64));
        }
        let f = r - a;
        if f.abs() < 1e-15 {
            break;
        }
        r = 1.0 / f;
    }
    None
}
