//! Exact scalars and the factorial family used throughout the crate.
//!
//! Everything is computed over [`Rational`], an arbitrary-precision fraction
//! kept in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction.
pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` reduced to lowest terms. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses the canonical `"p/q"` (or bare `"p"`) form.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| Error::RationalParse(s.to_string()))?;
    let den: BigInt = den.parse().map_err(|_| Error::RationalParse(s.to_string()))?;
    if den.is_zero() {
        return Err(Error::RationalParse(s.to_string()));
    }
    Ok(Rational::new(num, den))
}

/// Canonical serialization: `"p/q"`, or `"p"` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Nearest `f64` to `r`.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // numerator or denominator too large for a direct conversion
        let (n, d) = (r.numer(), r.denom());
        let shift = n.bits().max(d.bits()).saturating_sub(1000) as usize;
        let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Whether `r` is a non-positive integer `0, -1, -2, ...`.
pub fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_positive()
}

/// `n!`
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Lower factorial `(n)_k = n (n-1) ... (n-k+1)`, which is `n!/(n-k)!` for
/// `n >= k` and `0` for `n < k`.
pub fn falling_factorial(n: u64, k: u64) -> Rational {
    if n < k {
        return Rational::zero();
    }
    Rational::from_integer(((n - k + 1)..=n).fold(BigInt::one(), |acc, i| acc * i))
}

/// Lower factorial of a rational argument, `x (x-1) ... (x-k+1)`.
pub fn falling_factorial_rat(x: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut f = x.clone();
    for _ in 0..k {
        acc *= &f;
        f -= Rational::one();
    }
    acc
}

/// Rising factorial (Pochhammer symbol) `(x)_k = x (x+1) ... (x+k-1)`.
pub fn pochhammer(x: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut f = x.clone();
    for _ in 0..k {
        acc *= &f;
        f += Rational::one();
    }
    acc
}

/// `1/k!` for `k >= 0` and `0` for `k < 0`.
///
/// The negative branch encodes the primed sums of the kernels: any term whose
/// factorial argument would be negative simply drops out.
pub fn recip_factorial(k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    Rational::new(BigInt::one(), factorial(k as u64))
}

/// Table of `1/k!` for `k = 0..=max`.
pub(crate) fn recip_factorial_table(max: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max + 1);
    let mut f = BigInt::one();
    out.push(Rational::one());
    for k in 1..=max {
        f *= k;
        out.push(Rational::new(BigInt::one(), f.clone()));
    }
    out
}

/// `(-1)^k` as a sign multiplier.
pub(crate) fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `x^e` for a non-negative integer exponent, with `0^0 = 1`.
pub(crate) fn pow_rat(x: &Rational, e: u64) -> Rational {
    num_traits::pow::pow(x.clone(), e as usize)
}

/// Positive divisors of `n` by trial division, or `None` when `n` is too
/// large for that to be cheap.
pub(crate) fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            lo.push(BigInt::from(d));
            if d * d != n {
                hi.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    hi.reverse();
    lo.extend(hi);
    Some(lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(5, 0), int(1));
        assert_eq!(falling_factorial(2, 5), int(0));
        assert_eq!(falling_factorial(5, 3), int(60));
        assert_eq!(falling_factorial(0, 0), int(1));
    }

    #[test]
    fn recip_factorial_examples() {
        assert_eq!(recip_factorial(0), int(1));
        assert_eq!(recip_factorial(4), rat(1, 24));
        assert_eq!(recip_factorial(-2), int(0));
        let table = recip_factorial_table(6);
        for (k, v) in table.iter().enumerate() {
            assert_eq!(*v, recip_factorial(k as i64));
        }
    }

    #[test]
    fn parse_and_format_round_trip() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -4 ").unwrap(), int(-4));
        assert_eq!(parse_rational("2/-4").unwrap(), rat(-1, 2));
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn normalization_invariant() {
        let r = rat(10, -4);
        assert!(r.denom().is_positive());
        assert_eq!(r.numer().gcd(r.denom()), BigInt::one());
    }

    #[test]
    fn binomials_and_pochhammer() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(falling_factorial_rat(&int(-1), 2), int(2));
    }

    #[test]
    fn divisors() {
        let d = small_divisors(&BigInt::from(12)).unwrap();
        let d: Vec<i64> = d.iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
