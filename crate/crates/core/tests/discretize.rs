mod common;

use common::{nonzero_rational, rational, rationals};
use num_traits::Zero;
use proptest::prelude::*;
use umbral::corpus::{all_cases, CaseEquation};
use umbral::rational::falling_factorial;
use umbral::{
    int, inverse_transform, lin_residual, lin_residual_with, lin_residuals, lin_step, linear_recurrence_row,
    nonlin_residual_with, nonlin_residuals, nonlin_step, nonlinear_recurrence_row, taylor_to_lattice,
    LatticeSeq, LinearOde, MonomialForm, NonlinearOde, PolyCoeff, Rational, StarPath, TaylorCoeffs,
};

const LAST: usize = 10;

fn poly(max_degree: usize) -> impl Strategy<Value = PolyCoeff> {
    rationals(0..=max_degree + 1).prop_map(|cs| PolyCoeff::new(cs.into_iter().enumerate()))
}

fn linear_ode() -> impl Strategy<Value = LinearOde> {
    (1usize..=3)
        .prop_flat_map(|order| {
            (
                prop::collection::vec(poly(2), order),
                nonzero_rational(),
                poly(1),
                poly(2),
            )
        })
        .prop_map(|(mut coeffs, lead0, lead_rest, c0)| {
            let mut lead: Vec<(usize, Rational)> = vec![(0, lead0)];
            lead.extend(lead_rest.monomials().iter().map(|(m, a)| (m + 1, a.clone())));
            coeffs.push(PolyCoeff::new(lead));
            LinearOde::new(coeffs, c0).unwrap()
        })
}

fn nonlinear_ode() -> impl Strategy<Value = NonlinearOde> {
    (1usize..=2, prop::collection::vec(poly(1), 1..=3))
        .prop_map(|(m, coeffs)| NonlinearOde::new(m, coeffs).unwrap())
}

fn power_series_times(p: &PolyCoeff, f: &[Rational], n: usize) -> Rational {
    p.monomials()
        .iter()
        .filter(|(m, _)| *m <= n)
        .map(|(m, a)| a * &f[n - m])
        .sum()
}

fn derivative(b: &[Rational], l: usize) -> Vec<Rational> {
    (0..b.len().saturating_sub(l))
        .map(|k| falling_factorial((k + l) as u64, l as u64) * &b[k + l])
        .collect()
}

/// Taylor coefficients of the solution of `Σ a_l z^{(l)} + c_0 = 0`,
/// by matching powers of `t` directly.
fn taylor_solve_linear(eq: &LinearOde, init: &[Rational], len: usize) -> Vec<Rational> {
    let order = eq.order();
    let mut b: Vec<Rational> = init.to_vec();
    b.resize(len, Rational::zero());
    let lead = eq.coeffs()[order].constant_term();
    for n in 0..len - order {
        // with b[n+N] = 0, collect [t^n] of the left side
        let mut acc = coeff_at(eq.c0(), n);
        for (l, a) in eq.coeffs().iter().enumerate() {
            acc += power_series_times(a, &derivative(&b, l), n);
        }
        b[n + order] = -acc / (&lead * falling_factorial((n + order) as u64, order as u64));
    }
    b
}

fn coeff_at(p: &PolyCoeff, n: usize) -> Rational {
    p.monomials()
        .iter()
        .find(|(m, _)| *m == n)
        .map_or_else(Rational::zero, |(_, a)| a.clone())
}

fn cauchy(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    (0..a.len()).map(|n| (0..=n).map(|i| &a[i] * &b[n - i]).sum()).collect()
}

/// Taylor coefficients of the solution of `z^{(m)} = Σ_j a_j z^j`.
fn taylor_solve_nonlinear(eq: &NonlinearOde, init: &[Rational], len: usize) -> Vec<Rational> {
    let m = eq.deriv_order();
    let mut b: Vec<Rational> = init.to_vec();
    b.resize(len, Rational::zero());
    for n in 0..len - m {
        // [t^n] of the right side only reads b[0..=n]
        let mut rhs = Rational::zero();
        let mut power = vec![Rational::zero(); len];
        power[0] = int(1);
        for a in eq.coeffs() {
            rhs += power_series_times(a, &power, n);
            power = cauchy(&power, &b);
        }
        b[n + m] = rhs / falling_factorial((n + m) as u64, m as u64);
    }
    b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Stepping on the lattice and inverse-transforming recovers the Taylor
    /// coefficients of the continuous solution.
    #[test]
    fn linear_truncation_correspondence(eq in linear_ode(), b_init in rationals(3)) {
        let order = eq.order();
        let b_init = &b_init[..order];
        let b = taylor_solve_linear(&eq, b_init, LAST + 1);
        let z_init = taylor_to_lattice(&TaylorCoeffs::new(b.clone()), order - 1).unwrap();
        let z = lin_step(&eq, z_init.as_slice(), LAST).unwrap();
        prop_assert_eq!(inverse_transform(&z).into_vec(), b.clone());
        prop_assert_eq!(z, taylor_to_lattice(&TaylorCoeffs::new(b), LAST).unwrap());
    }

    #[test]
    fn nonlinear_truncation_correspondence(eq in nonlinear_ode(), b_init in rationals(2)) {
        let m = eq.deriv_order();
        let b = taylor_solve_nonlinear(&eq, &b_init[..m], 9);
        let z_init = taylor_to_lattice(&TaylorCoeffs::new(b.clone()), m - 1).unwrap();
        let z = nonlin_step(&eq, z_init.as_slice(), 8).unwrap();
        prop_assert_eq!(inverse_transform(&z).into_vec(), b.clone());
        prop_assert!(nonlin_residuals(&eq, &z).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn linear_residual_vanishes_on_images(eq in linear_ode(), b_init in rationals(3)) {
        let b = taylor_solve_linear(&eq, &b_init[..eq.order()], LAST + 1);
        let z = taylor_to_lattice(&TaylorCoeffs::new(b), LAST).unwrap();
        prop_assert!(lin_residuals(&eq, &z).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn recurrence_rows_match_residuals(eq in linear_ode(), z in rationals(LAST + 1)) {
        let z = LatticeSeq::new(z);
        for n in 0..=LAST - eq.order() {
            prop_assert_eq!(linear_recurrence_row(&eq, n).eval(&z).unwrap(), lin_residual(&eq, &z, n).unwrap());
        }
    }

    #[test]
    fn nonlinear_rows_match_residuals(eq in nonlinear_ode(), z in rationals(7)) {
        let z = LatticeSeq::new(z);
        for n in 0..=6 - eq.deriv_order() {
            let row = nonlinear_recurrence_row(&eq, n).eval(&z).unwrap();
            prop_assert_eq!(row, nonlin_residual_with(&eq, &z, n, StarPath::Kernel).unwrap());
        }
    }

    #[test]
    fn residual_is_affine_in_c0(eq in linear_ode(), z in rationals(LAST + 1), shift in rational()) {
        let z = LatticeSeq::new(z);
        let moved = LinearOde::new(
            eq.coeffs().to_vec(),
            PolyCoeff::new(eq.c0().monomials().iter().cloned().chain([(0, shift.clone())])),
        )
        .unwrap();
        prop_assert_eq!(lin_residual(&moved, &z, 0).unwrap(), lin_residual(&eq, &z, 0).unwrap() + shift);
    }
}

#[test]
fn shift_and_kernel_forms_agree_on_corpus() {
    for case in all_cases() {
        for sol in &case.solutions {
            match &case.eq {
                CaseEquation::Linear(eq) => {
                    let z = sol.lattice(10 + eq.order()).unwrap();
                    for n in 0..=10 {
                        assert_eq!(
                            lin_residual_with(eq, &z, n, MonomialForm::Shift).unwrap(),
                            lin_residual_with(eq, &z, n, MonomialForm::Kernel).unwrap(),
                            "{} n={n}",
                            case.name
                        );
                    }
                }
                CaseEquation::Nonlinear(eq) => {
                    let z = sol.lattice(8 + eq.deriv_order()).unwrap();
                    for n in 0..=8 {
                        assert_eq!(
                            nonlin_residual_with(eq, &z, n, StarPath::Convolution).unwrap(),
                            nonlin_residual_with(eq, &z, n, StarPath::Kernel).unwrap(),
                            "{} n={n}",
                            case.name
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn not_forward_solvable_when_leading_coefficient_vanishes_at_origin() {
    let eq = LinearOde::homogeneous(vec![PolyCoeff::constant(int(1)), PolyCoeff::new([(1, int(1))])]).unwrap();
    assert!(lin_step(&eq, &[int(1)], 4).is_err());
}

#[test]
fn residual_needs_enough_entries() {
    let eq = LinearOde::homogeneous(vec![PolyCoeff::zero(), PolyCoeff::zero(), PolyCoeff::constant(int(1))]).unwrap();
    let z = LatticeSeq::from_ints([1, 2, 3]);
    assert!(lin_residual(&eq, &z, 0).is_ok());
    assert!(lin_residual(&eq, &z, 1).is_err());
}
