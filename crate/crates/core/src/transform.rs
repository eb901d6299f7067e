//! The interpolating transform between lattice values and falling-factorial
//! coefficients.
//!
//! ```text
//! z_n = Σ_{l=0}^{n} (n)_l ζ_l
//! ζ_n = Σ_{l=0}^{n} (-1)^{n-l} z_l / (l! (n-l)!)
//! ```
//!
//! Both maps are lower triangular, so the first `L+1` entries of either side
//! determine exactly the first `L+1` entries of the other.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::seq::{FourierSeq, LatticeSeq, TaylorCoeffs};

/// `z_n = Σ_{l≤n} (n)_l ζ_l`.
pub fn forward_transform(zeta: &FourierSeq) -> LatticeSeq {
    forward_slice(zeta.as_slice()).into()
}

/// Numerators over the least common denominator.
fn common_denominator(xs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = xs.iter().fold(BigInt::one(), |d, x| d.lcm(x.denom()));
    let nums = xs.iter().map(|x| x.numer() * (&d / x.denom())).collect();
    (nums, d)
}

pub(crate) fn forward_slice(zeta: &[Rational]) -> Vec<Rational> {
    let (nums, d) = common_denominator(zeta);
    (0..nums.len())
        .map(|n| {
            let mut acc = BigInt::zero();
            let mut ff = BigInt::one();
            for (l, c) in nums.iter().enumerate().take(n + 1) {
                if !c.is_zero() {
                    acc += c * &ff;
                }
                ff *= n - l;
            }
            Rational::new(acc, d.clone())
        })
        .collect()
}

/// One entry of the forward transform; reads `zeta[0..=n]`.
pub(crate) fn forward_entry(zeta: &[Rational], n: usize) -> Rational {
    let mut acc = Rational::zero();
    let mut ff = BigInt::one();
    for (l, c) in zeta.iter().enumerate().take(n + 1) {
        if !c.is_zero() {
            acc += c * Rational::from_integer(ff.clone());
        }
        ff *= n - l;
    }
    acc
}

/// `ζ_n = Σ_{l≤n} (-1)^{n-l} z_l / (l!(n-l)!)`.
pub fn inverse_transform(z: &LatticeSeq) -> FourierSeq {
    inverse_slice(z.as_slice()).into()
}

pub(crate) fn inverse_slice(z: &[Rational]) -> Vec<Rational> {
    let (nums, d) = common_denominator(z);
    let mut nfact = BigInt::one();
    (0..nums.len())
        .map(|n| {
            if n > 0 {
                nfact *= n;
            }
            // n! ζ_n = Σ (-1)^{n-l} C(n, l) z_l
            let mut acc = BigInt::zero();
            let mut binom = BigInt::one();
            for (l, c) in nums.iter().enumerate().take(n + 1) {
                if !c.is_zero() {
                    if (n - l) % 2 == 0 {
                        acc += c * &binom;
                    } else {
                        acc -= c * &binom;
                    }
                }
                binom = binom * (n - l) / (l + 1);
            }
            Rational::new(acc, &d * &nfact)
        })
        .collect()
}

pub(crate) fn inverse_entry(z: &[Rational], n: usize, rf: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (l, zl) in z.iter().enumerate().take(n + 1) {
        if zl.is_zero() {
            continue;
        }
        let term = zl * &rf[l] * &rf[n - l];
        if (n - l).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Lattice image `z_n = Σ_{k≤n} b_k n!/(n-k)!` of a formal power series,
/// for `n = 0..=last`.
///
/// `b` must store at least `last + 1` coefficients; polynomials have to be
/// padded explicitly with [`TaylorCoeffs::zero_padded`].
pub fn taylor_to_lattice(b: &TaylorCoeffs, last: usize) -> Result<LatticeSeq> {
    if b.len() < last + 1 {
        return Err(Error::IndexOutOfRange {
            index: last as i64,
            len: b.len(),
        });
    }
    Ok(forward_slice(&b.as_slice()[..=last]).into())
}
