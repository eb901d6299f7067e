//! Finite prefixes of lattice functions, falling-factorial coefficient
//! streams, and Taylor coefficient streams.
//!
//! All three are explicit-length vectors of [`Rational`]. Reading past the
//! stored prefix is an [`Error::IndexOutOfRange`], never an implicit zero.

use std::ops::Index;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

macro_rules! rational_seq {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, Default)]
        pub struct $name(Vec<Rational>);

        impl $name {
            pub fn new(values: Vec<Rational>) -> Self {
                Self(values)
            }

            pub fn from_ints<I: IntoIterator<Item = i64>>(values: I) -> Self {
                Self(values.into_iter().map(int).collect())
            }

            pub fn zeros(len: usize) -> Self {
                Self(vec![Rational::zero(); len])
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn as_slice(&self) -> &[Rational] {
                &self.0
            }

            pub fn into_vec(self) -> Vec<Rational> {
                self.0
            }

            pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
                self.0.iter()
            }

            /// Checked access.
            pub fn get(&self, index: i64) -> Result<&Rational> {
                if index < 0 || index as usize >= self.0.len() {
                    return Err(Error::IndexOutOfRange { index, len: self.0.len() });
                }
                Ok(&self.0[index as usize])
            }

            /// The first `len` entries; errors if fewer are stored.
            pub fn prefix(&self, len: usize) -> Result<Self> {
                if len > self.0.len() {
                    return Err(Error::IndexOutOfRange { index: len as i64 - 1, len: self.0.len() });
                }
                Ok(Self(self.0[..len].to_vec()))
            }

            /// Explicitly extends with zeros up to `len` (no-op if already longer).
            pub fn zero_padded(&self, len: usize) -> Self {
                let mut v = self.0.clone();
                if v.len() < len {
                    v.resize(len, Rational::zero());
                }
                Self(v)
            }

            pub fn is_all_zero(&self) -> bool {
                self.0.iter().all(Zero::is_zero)
            }
        }

        impl Index<usize> for $name {
            type Output = Rational;
            fn index(&self, i: usize) -> &Rational {
                &self.0[i]
            }
        }

        impl From<Vec<Rational>> for $name {
            fn from(v: Vec<Rational>) -> Self {
                Self(v)
            }
        }

        impl FromIterator<Rational> for $name {
            fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
                Self(iter.into_iter().collect())
            }
        }

        impl<'a> IntoIterator for &'a $name {
            type Item = &'a Rational;
            type IntoIter = std::slice::Iter<'a, Rational>;
            fn into_iter(self) -> Self::IntoIter {
                self.0.iter()
            }
        }
    };
}

rational_seq! {
    /// Values `z_0, ..., z_L` of a function on the regular lattice `n = 0, 1, 2, ...`.
    LatticeSeq
}

rational_seq! {
    /// Coefficients `ζ_0, ..., ζ_L` in the lower-factorial basis `(n)_k`.
    FourierSeq
}

rational_seq! {
    /// Prefix `b_0, ..., b_L` of a formal power series `Σ b_k t^k`.
    TaylorCoeffs
}

impl TaylorCoeffs {
    /// Cauchy product truncated to the shorter operand.
    pub fn cauchy(&self, other: &TaylorCoeffs) -> TaylorCoeffs {
        let len = self.len().min(other.len());
        (0..len)
            .map(|n| (0..=n).map(|i| &self[i] * &other[n - i]).sum())
            .collect()
    }

    /// Multiplicative inverse of the series through `len` coefficients.
    pub fn reciprocal(&self, len: usize) -> Result<TaylorCoeffs> {
        if self.is_empty() || self[0].is_zero() {
            return Err(Error::SingularAtOrigin);
        }
        let mut out: Vec<Rational> = Vec::with_capacity(len);
        let inv0 = self[0].recip();
        for n in 0..len {
            if n == 0 {
                out.push(inv0.clone());
                continue;
            }
            let mut acc = Rational::zero();
            for i in 1..=n {
                // coefficients past the stored prefix are a genuine error here
                let a = self.get(i as i64)?;
                if !a.is_zero() {
                    acc += a * &out[n - i];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(TaylorCoeffs(out))
    }

    pub fn scaled(&self, c: &Rational) -> TaylorCoeffs {
        self.iter().map(|x| x * c).collect()
    }
}
