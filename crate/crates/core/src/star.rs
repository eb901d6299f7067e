//! The star product on lattice sequences, `p_n * p_m = p_{n+m}` for the
//! lower factorials `p_k(n) = (n)_k`.
//!
//! Two independent evaluation routes are provided:
//!
//! * **convolution**: inverse-transform, Cauchy-multiply the falling-factorial
//!   coefficients, forward-transform back. `O(p L²)` for a `p`-th power.
//! * **kernel**: the closed form
//!   `z^{*p}_n = Σ_{Σk ≤ n} (-1)^{Σk}/(k_1!⋯k_p!) · K_{n,k} · z_{k_1}⋯z_{k_p}` with
//!   `K_{n,k} = (-1)^n n! (p-1)^{n-Σk} / (n-Σk)!`. `O(L^{p+1})`.
//!
//! [`star_kernel_bruteforce`] evaluates the defining multi-sum for `K`
//! literally and is the oracle for [`star_kernel_closed`].

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rational::{factorial, falling_factorial, int, pow_rat, recip_factorial, sign, Rational};
use crate::seq::LatticeSeq;
use crate::transform::{forward_slice, inverse_slice};

/// Evaluation route for star powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarPath {
    Convolution,
    Kernel,
}

/// Formula used for `t^m * w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialForm {
    /// `(n)_m w_{n-m}`
    Shift,
    /// `Σ_k Σ'_j K(k, j, m, n) w_j`
    Kernel,
}

/// Indices of the star kernel `K_{n, k_1, ..., k_p}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarKernelArgs {
    n: usize,
    ks: Vec<usize>,
}

impl StarKernelArgs {
    pub fn new(n: usize, ks: Vec<usize>) -> Result<Self> {
        if ks.is_empty() {
            return Err(Error::ArityZero);
        }
        Ok(Self { n, ks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    pub fn arity(&self) -> usize {
        self.ks.len()
    }
}

/// Cauchy product of coefficient streams, truncated to `len`.
fn cauchy(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    (0..len)
        .map(|n| {
            let mut acc = Rational::zero();
            for i in 0..=n {
                if a[i].is_zero() || b[n - i].is_zero() {
                    continue;
                }
                acc += &a[i] * &b[n - i];
            }
            acc
        })
        .collect()
}

/// `u * v` on sequences of equal length.
pub fn star_multiply(u: &LatticeSeq, v: &LatticeSeq) -> Result<LatticeSeq> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let a = inverse_slice(u.as_slice());
    let b = inverse_slice(v.as_slice());
    Ok(forward_slice(&cauchy(&a, &b, u.len())).into())
}

/// `z^{*p}` for `p ≥ 1`.
pub fn star_power(z: &LatticeSeq, p: usize, path: StarPath) -> Result<LatticeSeq> {
    if p == 0 {
        return Err(Error::ArityZero);
    }
    Ok(match path {
        StarPath::Convolution => star_power_convolution(z.as_slice(), p).into(),
        StarPath::Kernel => star_power_kernel(z.as_slice(), p).into(),
    })
}

pub(crate) fn star_power_convolution(z: &[Rational], p: usize) -> Vec<Rational> {
    let zeta = inverse_slice(z);
    let mut acc = zeta.clone();
    for _ in 1..p {
        acc = cauchy(&acc, &zeta, z.len());
    }
    forward_slice(&acc)
}

/// Closed kernel as a function of `n`, `s = Σk` and `p`:
/// `(-1)^n n! (p-1)^{n-s} / (n-s)!`, zero when `n < s`, with `0^0 = 1`.
fn kernel_closed_value(n: usize, s: usize, p: usize) -> Rational {
    if n < s {
        return Rational::zero();
    }
    let r = n - s;
    let v = Rational::from_integer(factorial(n as u64))
        * pow_rat(&int(p as i64 - 1), r as u64)
        * recip_factorial(r as i64);
    v * int(sign(n as i64))
}

fn star_power_kernel(z: &[Rational], p: usize) -> Vec<Rational> {
    // u_k = (-1)^k z_k / k!
    let u: Vec<Rational> = z
        .iter()
        .enumerate()
        .map(|(k, zk)| zk * recip_factorial(k as i64) * int(sign(k as i64)))
        .collect();
    (0..z.len())
        .into_par_iter()
        .map(|n| {
            let weights: Vec<Rational> = (0..=n).map(|s| kernel_closed_value(n, s, p)).collect();
            let mut acc = Rational::zero();
            let one = Rational::from_integer(BigInt::from(1));
            kernel_tuples(&u, &weights, p, n, 0, &one, &mut acc);
            acc
        })
        .collect()
}

/// Sums `weights[Σk] · Π u_{k_i}` over all ordered `p`-tuples with `Σk ≤ n`.
fn kernel_tuples(
    u: &[Rational],
    weights: &[Rational],
    remaining: usize,
    n: usize,
    used: usize,
    partial: &Rational,
    acc: &mut Rational,
) {
    if remaining == 0 {
        *acc += partial * &weights[used];
        return;
    }
    for k in 0..=(n - used) {
        if u[k].is_zero() {
            continue;
        }
        let next = partial * &u[k];
        kernel_tuples(u, weights, remaining - 1, n, used + k, &next, acc);
    }
}

/// `K_{n,k_1..k_p} = (-1)^n n! (p-1)^{n-Σk}/(n-Σk)!` for `n ≥ Σk`, else `0`.
pub fn star_kernel_closed(args: &StarKernelArgs) -> Rational {
    let s: usize = args.ks.iter().sum();
    kernel_closed_value(args.n, s, args.arity())
}

/// Literal multi-sum
/// `Σ_{l_1..l_p=0}^{n} (-1)^{Σl} Π 1/(l_i-k_i)! · n!/(n-Σl)!`,
/// restricted to the terms where no factorial argument is negative.
pub fn star_kernel_bruteforce(args: &StarKernelArgs) -> Rational {
    let n = args.n;
    let mut acc = BigInt::zero();
    bruteforce_terms(&args.ks, n, 0, &BigInt::one(), &mut acc);
    Rational::from_integer(acc)
}

/// Adds the terms with `l_1..l_i` fixed (`used = Σ l`, `denom = Π (l-k)!`).
fn bruteforce_terms(ks: &[usize], n: usize, used: usize, denom: &BigInt, acc: &mut BigInt) {
    let Some((k, rest)) = ks.split_first() else {
        let term = factorial(n as u64) / (denom * factorial((n - used) as u64));
        if used.is_multiple_of(2) {
            *acc += term;
        } else {
            *acc -= term;
        }
        return;
    };
    for l in *k..=n.saturating_sub(used) {
        if used + l > n {
            break;
        }
        bruteforce_terms(rest, n, used + l, &(denom * factorial((l - k) as u64)), acc);
    }
}

/// `K(k, j, m, n) = (-1)^{k-j-m} / (j! (k-m-j)!) · n!/(n-k)!`, the
/// lattice kernel of multiplication by `t^m`.
pub fn monomial_kernel(k: usize, j: usize, m: usize, n: usize) -> Rational {
    let r = k as i64 - m as i64 - j as i64;
    if r < 0 || k > n {
        return Rational::zero();
    }
    recip_factorial(j as i64)
        * recip_factorial(r)
        * falling_factorial(n as u64, k as u64)
        * int(sign(r))
}

/// The lattice image of `t^m · w(t)`, i.e. `(t^m) * w`. Entries below `m`
/// vanish.
pub fn monomial_star(m: usize, w: &LatticeSeq, form: MonomialForm) -> LatticeSeq {
    (0..w.len())
        .map(|n| monomial_star_entry(m, w.as_slice(), n, form))
        .collect()
}

/// Entry `n` of `(t^m) * w`; reads `w[0..=n-m]`.
pub(crate) fn monomial_star_entry(m: usize, w: &[Rational], n: usize, form: MonomialForm) -> Rational {
    if n < m {
        return Rational::zero();
    }
    match form {
        MonomialForm::Shift => falling_factorial(n as u64, m as u64) * &w[n - m],
        MonomialForm::Kernel => {
            let mut acc = Rational::zero();
            for k in m..=n {
                for (j, wj) in w.iter().enumerate().take(k - m + 1) {
                    if wj.is_zero() {
                        continue;
                    }
                    acc += monomial_kernel(k, j, m, n) * wj;
                }
            }
            acc
        }
    }
}

/// `f64` versions of the star-power routes, for timing only.
///
/// Factorials overflow `f64` past `170!`, so values for long sequences are
/// not meaningful; the arithmetic work per path is the same as in the exact
/// routes.
pub mod float {
    use super::StarPath;

    struct Tables {
        fact: Vec<f64>,
        rfact: Vec<f64>,
    }

    impl Tables {
        fn new(len: usize) -> Self {
            let mut fact = vec![1.0f64; len + 1];
            for k in 1..=len {
                fact[k] = fact[k - 1] * k as f64;
            }
            let rfact = fact.iter().map(|f| 1.0 / f).collect();
            Self { fact, rfact }
        }
    }

    fn inverse(z: &[f64], t: &Tables) -> Vec<f64> {
        (0..z.len())
            .map(|n| {
                let mut acc = 0.0;
                for (l, zl) in z.iter().enumerate().take(n + 1) {
                    let term = zl * t.rfact[l] * t.rfact[n - l];
                    if (n - l) % 2 == 0 {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                acc
            })
            .collect()
    }

    fn forward(zeta: &[f64]) -> Vec<f64> {
        (0..zeta.len())
            .map(|n| {
                let mut acc = 0.0;
                let mut ff = 1.0;
                for (l, c) in zeta.iter().enumerate().take(n + 1) {
                    acc += c * ff;
                    ff *= (n - l) as f64;
                }
                acc
            })
            .collect()
    }

    fn cauchy(a: &[f64], b: &[f64]) -> Vec<f64> {
        (0..a.len())
            .map(|n| (0..=n).map(|i| a[i] * b[n - i]).sum())
            .collect()
    }

    fn kernel(z: &[f64], p: usize, t: &Tables) -> Vec<f64> {
        let u: Vec<f64> = z
            .iter()
            .enumerate()
            .map(|(k, v)| if k % 2 == 0 { v * t.rfact[k] } else { -v * t.rfact[k] })
            .collect();
        let base = (p as f64) - 1.0;
        (0..z.len())
            .map(|n| {
                let sgn = if n % 2 == 0 { 1.0 } else { -1.0 };
                let weights: Vec<f64> = (0..=n)
                    .map(|s| sgn * t.fact[n] * base.powi((n - s) as i32) * t.rfact[n - s])
                    .collect();
                let mut acc = 0.0;
                tuples(&u, &weights, p, n, 0, 1.0, &mut acc);
                acc
            })
            .collect()
    }

    fn tuples(u: &[f64], w: &[f64], remaining: usize, n: usize, used: usize, partial: f64, acc: &mut f64) {
        if remaining == 0 {
            *acc += partial * w[used];
            return;
        }
        for k in 0..=(n - used) {
            tuples(u, w, remaining - 1, n, used + k, partial * u[k], acc);
        }
    }

    /// `z^{*p}` in floating point; `p = 0` yields the unit sequence.
    pub fn star_power_f64(z: &[f64], p: usize, path: StarPath) -> Vec<f64> {
        if p == 0 {
            return vec![1.0; z.len()];
        }
        let t = Tables::new(z.len());
        match path {
            StarPath::Convolution => {
                let zeta = inverse(z, &t);
                let mut acc = zeta.clone();
                for _ in 1..p {
                    acc = cauchy(&acc, &zeta);
                }
                forward(&acc)
            }
            StarPath::Kernel => kernel(z, p, &t),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn args(n: usize, ks: &[usize]) -> StarKernelArgs {
        StarKernelArgs::new(n, ks.to_vec()).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let p1 = LatticeSeq::from_ints(0..6);
        let sq = star_multiply(&p1, &p1).unwrap();
        assert_eq!(sq, LatticeSeq::from_ints((0..6).map(|n| n * (n - 1))));

        let unit = LatticeSeq::from_ints([1; 6]);
        let v = LatticeSeq::new(vec![rat(1, 3), int(-2), int(0), rat(7, 5), int(1), int(9)]);
        assert_eq!(star_multiply(&unit, &v).unwrap(), v);

        let e = LatticeSeq::from_ints((0..10).map(|n| 1 << n));
        let e2 = LatticeSeq::from_ints((0..10).map(|n| 3i64.pow(n as u32)));
        assert_eq!(star_multiply(&e, &e).unwrap(), e2);

        assert_eq!(
            star_multiply(&unit, &p1.prefix(4).unwrap()),
            Err(Error::LengthMismatch { left: 6, right: 4 })
        );
    }

    #[test]
    fn power_examples() {
        let z = LatticeSeq::new(vec![rat(1, 2), int(3), rat(-4, 7), int(2)]);
        for path in [StarPath::Convolution, StarPath::Kernel] {
            assert_eq!(star_power(&z, 1, path).unwrap(), z);
            assert_eq!(star_power(&z, 0, path), Err(Error::ArityZero));
        }
        let e = LatticeSeq::from_ints((0..9).map(|n| 1 << n));
        let e3 = LatticeSeq::from_ints((0..9).map(|n| 4i64.pow(n as u32)));
        assert_eq!(star_power(&e, 3, StarPath::Convolution).unwrap(), e3);
        assert_eq!(star_power(&e, 3, StarPath::Kernel).unwrap(), e3);

        // Σ_k (n)_k, the lattice image of 1/(1-t)
        let z: LatticeSeq = (0..=12u64)
            .map(|n| (0..=n).map(|k| falling_factorial(n, k)).sum())
            .collect();
        assert_eq!(&z.as_slice()[..4], &[int(1), int(2), int(5), int(16)]);
        assert_eq!(
            star_power(&z, 2, StarPath::Kernel).unwrap(),
            star_power(&z, 2, StarPath::Convolution).unwrap()
        );
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(star_kernel_closed(&args(2, &[1, 1])), int(2));
        assert_eq!(star_kernel_bruteforce(&args(2, &[1, 1])), int(2));
        assert_eq!(star_kernel_closed(&args(1, &[0, 0])), int(-1));
        assert_eq!(star_kernel_bruteforce(&args(1, &[0, 0])), int(-1));
        assert_eq!(star_kernel_closed(&args(1, &[1, 1])), int(0));
        assert_eq!(star_kernel_bruteforce(&args(1, &[1, 1])), int(0));
        assert_eq!(star_kernel_bruteforce(&args(4, &[3, 2, 0])), int(0));
        // n=3, ks=(0,1): (-1)^3 3! 1^2 / 2! = -3
        assert_eq!(star_kernel_bruteforce(&args(3, &[0, 1])), int(-3));
        assert_eq!(star_kernel_closed(&args(3, &[0, 1])), int(-3));
        assert_eq!(StarKernelArgs::new(3, vec![]), Err(Error::ArityZero));
    }

    #[test]
    fn monomial_examples() {
        let w = LatticeSeq::new(vec![rat(2, 3), int(-1), int(5), rat(1, 7)]);
        for form in [MonomialForm::Shift, MonomialForm::Kernel] {
            assert_eq!(monomial_star(0, &w, form), w);
        }
        let c = rat(3, 2);
        let constant = LatticeSeq::new(vec![c.clone(); 5]);
        let expect: LatticeSeq = (0..5).map(|n| &c * int(n)).collect();
        assert_eq!(monomial_star(1, &constant, MonomialForm::Shift), expect);
        assert_eq!(monomial_star(1, &constant, MonomialForm::Kernel), expect);

        let w: LatticeSeq = (0..11).map(|k| rat(k * k - 3, k + 2)).collect();
        let shift = monomial_star(1, &w, MonomialForm::Shift);
        assert_eq!(shift, monomial_star(1, &w, MonomialForm::Kernel));
        assert_eq!(shift[2], int(2) * &w[1]);
    }

    #[test]
    fn float_paths_agree_on_small_inputs() {
        let z: Vec<f64> = (0..10).map(|n| 1.0 / (1.0 + n as f64)).collect();
        let a = float::star_power_f64(&z, 3, StarPath::Convolution);
        let b = float::star_power_f64(&z, 3, StarPath::Kernel);
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() <= 1e-6 * (1.0 + x.abs()), "{x} vs {y}");
        }
        let e: Vec<f64> = (0..10).map(|n| 2f64.powi(n)).collect();
        let e3 = float::star_power_f64(&e, 3, StarPath::Convolution);
        for (n, v) in e3.iter().enumerate() {
            assert!((v - 4f64.powi(n as i32)).abs() < 1e-6 * 4f64.powi(n as i32));
        }
    }
}
