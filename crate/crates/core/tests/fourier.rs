mod common;

use common::{rational, rationals};
use num_traits::One;
use proptest::prelude::*;
use umbral::{
    forward_transform, fourier_solution, fourier_step, int, nonlin_step, ConstNonlinearOde, FourierSeq,
    Rational, TaylorCoeffs,
};

fn const_ode() -> impl Strategy<Value = ConstNonlinearOde> {
    (1usize..=2, rationals(1..=3), rational())
        .prop_map(|(m, a, b0)| ConstNonlinearOde::new(m, a, b0).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solution_formula_collapses_to_coefficients(b in rationals(21), n in 0usize..=20) {
        let b = TaylorCoeffs::new(b);
        prop_assert_eq!(fourier_solution(&b, n), b[n].clone());
    }

    #[test]
    fn coefficient_dynamics_match_lattice_stepping(eq in const_ode(), init in rationals(2)) {
        let m = eq.deriv_order();
        let zeta = fourier_step(&eq, &init[..m], 10).unwrap();
        let z_init = forward_transform(&FourierSeq::new(init[..m].to_vec()));
        let z = nonlin_step(&eq.to_nonlinear(), z_init.as_slice(), 10).unwrap();
        prop_assert_eq!(forward_transform(&zeta), z);
    }

    /// `z' = a z + b_0` reduces to `(n+1) ζ_{n+1} = a ζ_n + b_0 δ_{n0}`.
    #[test]
    fn linear_case_is_a_scalar_recurrence(a in rational(), b0 in rational(), z0 in rational()) {
        let eq = ConstNonlinearOde::new(1, vec![a.clone()], b0.clone()).unwrap();
        let zeta = fourier_step(&eq, std::slice::from_ref(&z0), 15).unwrap();
        let mut expect = vec![z0];
        for n in 0..15 {
            let mut next = &a * &expect[n];
            if n == 0 {
                next += &b0;
            }
            expect.push(next / int(n as i64 + 1));
        }
        prop_assert_eq!(zeta.into_vec(), expect);
    }
}

#[test]
fn square_equation_has_unit_coefficients() {
    let eq = ConstNonlinearOde::new(1, vec![int(0), int(1)], int(0)).unwrap();
    let zeta = fourier_step(&eq, &[int(1)], 30).unwrap();
    assert!(zeta.iter().all(Rational::is_one));
    let z = nonlin_step(&eq.to_nonlinear(), &[int(1)], 30).unwrap();
    assert_eq!(forward_transform(&zeta), z);
}

#[test]
fn exponential_coefficients() {
    // z' = z, z(0) = 1: ζ_n = 1/n!, the image is 2^n
    let eq = ConstNonlinearOde::new(1, vec![int(1)], int(0)).unwrap();
    let zeta = fourier_step(&eq, &[int(1)], 20).unwrap();
    let z = forward_transform(&zeta);
    for n in 0..=20u32 {
        assert_eq!(z[n as usize], int(2i64.pow(n)));
    }
}

#[test]
fn initial_values_must_match_order() {
    let eq = ConstNonlinearOde::new(2, vec![int(1)], int(0)).unwrap();
    assert!(fourier_step(&eq, &[int(1)], 5).is_err());
    assert!(ConstNonlinearOde::new(0, vec![int(1)], int(0)).is_err());
}
