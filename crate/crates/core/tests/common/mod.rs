#![allow(dead_code)]

use proptest::prelude::*;
use umbral::{rat, LatticeSeq, Rational};

pub fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != rat(0, 1))
}

pub fn rationals(len: impl Into<prop::collection::SizeRange>) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), len)
}

pub fn lattice(len: impl Into<prop::collection::SizeRange>) -> impl Strategy<Value = LatticeSeq> {
    rationals(len).prop_map(LatticeSeq::new)
}

/// `z_{n+1} - z_n`, one entry shorter.
pub fn forward_difference(z: &[Rational]) -> Vec<Rational> {
    z.windows(2).map(|w| &w[1] - &w[0]).collect()
}
