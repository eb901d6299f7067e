mod common;

use common::forward_difference;
use num_traits::Zero;
use proptest::prelude::*;
use umbral::galois::{constant_sequence, Generator, Sequence};
use umbral::{
    casoratian, char_roots, int, map_solution, modified_wronskian, rat, verify_fundamental, ConstLinearEq,
    FundamentalSystem, Rational, Root, WronskianValue,
};

fn root() -> impl Strategy<Value = Rational> {
    (1i64..=4).prop_flat_map(|q| (-3 * q..=3 * q).prop_map(move |p| rat(p, q)))
}

fn distinct_roots() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set(root(), 1..=4).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mapped_exponential_is_a_difference_eigenvector(lambda in root()) {
        let z = map_solution(&lambda, 0, 12);
        let dz = forward_difference(z.as_slice());
        for (n, d) in dz.iter().enumerate() {
            prop_assert_eq!(d, &(&lambda * &z[n]));
        }
    }

    #[test]
    fn distinct_rational_roots_give_exact_fundamental_systems(roots in distinct_roots()) {
        let eq = ConstLinearEq::from_roots(&roots).unwrap();
        let report = verify_fundamental(&eq, 20).unwrap();
        prop_assert!(report.is_exact());
        prop_assert!(report.passed());
        prop_assert_eq!(report.dimension(), roots.len());
        prop_assert!(matches!(report.wronskian, Some(WronskianValue::Exact(ref w)) if !w.is_zero()));
    }

    #[test]
    fn repeated_roots_stay_independent(lambda in root(), mult in 1usize..=3, other in root()) {
        prop_assume!(other != lambda);
        let mut roots = vec![lambda; mult];
        roots.push(other);
        let eq = ConstLinearEq::from_roots(&roots).unwrap();
        let report = verify_fundamental(&eq, 16).unwrap();
        prop_assert!(report.passed());
        prop_assert_eq!(report.roots.iter().map(|r| r.multiplicity).sum::<usize>(), roots.len());
    }

    #[test]
    fn constants_are_scaled_by_a0(a in prop::collection::vec((-9i64..=9, 1i64..=4), 1..=4), c in -9i64..=9) {
        let eq = ConstLinearEq::new(a.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap();
        let z = constant_sequence(&int(c), 10);
        for n in 0..=10 - eq.order() {
            prop_assert_eq!(eq.residual(&z, n).unwrap(), &eq.coeffs()[0] * int(c));
        }
    }
}

#[test]
fn harmonic_system_is_exact_with_unit_wronskian() {
    let eq = ConstLinearEq::new(vec![int(1), int(0)]).unwrap();
    let roots = char_roots(&eq);
    assert!(roots.iter().all(|r| matches!(r.root, Root::Quadratic { .. })));
    let report = verify_fundamental(&eq, 20).unwrap();
    assert!(report.is_exact() && report.passed());
    assert_eq!(report.wronskian, Some(WronskianValue::Exact(int(-1))));
    // the real-form generators are the images of sin t and cos t
    let sys = &report.system;
    let seqs: Vec<_> = sys.generators().iter().map(|g| g.sequence(5)).collect();
    let first = match &seqs[0] {
        Sequence::Exact(z) => z.as_slice().to_vec(),
        Sequence::Float(_) => panic!("expected exact"),
    };
    assert_eq!(first, [0, 1, 2, 2, 0, -4].map(int).to_vec());
}

#[test]
fn irreducible_cubic_uses_float_generators() {
    // λ³ - 2
    let eq = ConstLinearEq::new(vec![int(-2), int(0), int(0)]).unwrap();
    let report = verify_fundamental(&eq, 20).unwrap();
    assert!(!report.is_exact());
    assert!(report.passed(), "{report:?}");
    assert!(matches!(report.wronskian, Some(WronskianValue::Float(w)) if w.abs() > 1e-6));
}

#[test]
fn mixed_rational_and_quadratic_roots() {
    // (λ - 1/2)(λ² - 2)
    let eq = ConstLinearEq::new(vec![int(1), int(-2), rat(-1, 2)]).unwrap();
    let report = verify_fundamental(&eq, 20).unwrap();
    assert!(report.is_exact() && report.passed());
    assert!(report.system.generators().iter().any(|g| matches!(g, Generator::Quadratic { .. })));
}

#[test]
fn casoratian_detects_dependence() {
    let a = map_solution(&int(2), 0, 6);
    let doubled = a.iter().map(|v| v * int(2)).collect();
    assert!(casoratian(&[a.clone(), doubled], 0).unwrap().is_zero());
    let b = map_solution(&int(-1), 0, 6);
    assert_eq!(casoratian(&[a, b], 0).unwrap(), int(-3));
}

#[test]
fn singular_system_is_reported() {
    let g = Generator::Rational { lambda: int(1), j: 0 };
    let sys = FundamentalSystem::new(vec![g.clone(), g]);
    assert!(modified_wronskian(&sys, 0).is_err());
}
