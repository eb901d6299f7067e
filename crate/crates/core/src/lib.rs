//! Exact discretization of ODEs on a regular lattice through the umbral
//! correspondence between `d/dt` and the forward difference `Δ`.
//!
//! A power series `Σ b_k t^k` is sent to the lattice sequence
//! `z_n = Σ_k b_k (n)_k`. Under this map the ordinary product becomes the
//! nonlocal star product, `d/dt` becomes `Δ`, and every polynomial-coefficient
//! ODE acquires a lattice analog whose solutions are exactly the images of
//! the continuous solutions.
//!
//! ```
//! use umbral::{lin_step, LinearOde, PolyCoeff, int};
//!
//! // z'' + z = 0
//! let eq = LinearOde::homogeneous(vec![
//!     PolyCoeff::constant(int(1)),
//!     PolyCoeff::zero(),
//!     PolyCoeff::constant(int(1)),
//! ])?;
//! let z = lin_step(&eq, &[int(0), int(1)], 5)?;
//! assert_eq!(z.as_slice(), &[int(0), int(1), int(2), int(2), int(0), int(-4)]);
//! # Ok::<(), umbral::Error>(())
//! ```

pub mod corpus;
pub mod delta;
pub mod discretize;
pub mod error;
pub mod fourier;
pub mod galois;
pub mod poly;
pub mod rational;
pub mod seq;
pub mod series;
pub mod star;
pub mod transform;

pub use delta::{apply_stencil, basic_sequence, symbol_series, validate_stencil, BasicSequence, DeltaStencil};
pub use discretize::{
    delta_power, lin_residual, lin_residual_with, lin_residuals, lin_step, linear_recurrence_row,
    nonlin_residual, nonlin_residual_with, nonlin_residuals, nonlin_step, nonlinear_recurrence_row,
    LinearOde, LinearRow, NonlinearOde, NonlinearRow, PolyCoeff,
};
pub use error::{Error, Result};
pub use fourier::{fourier_solution, fourier_step, ConstNonlinearOde};
pub use galois::{
    casoratian, char_roots, map_solution, modified_wronskian, verify_fundamental, ConstLinearEq,
    FundamentalSystem, Root, RootDatum, WronskianValue,
};
pub use poly::Polynomial;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
pub use seq::{FourierSeq, LatticeSeq, TaylorCoeffs};
pub use series::{series_inverse, FormalSeries};
pub use star::{
    monomial_kernel, monomial_star, star_kernel_bruteforce, star_kernel_closed, star_multiply,
    star_power, MonomialForm, StarKernelArgs, StarPath,
};
pub use transform::{forward_transform, inverse_transform, taylor_to_lattice};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/transform.md")]
    mod transform {}
    #[doc = include_str!("../../../book/src/delta-operators.md")]
    mod delta_operators {}
    #[doc = include_str!("../../../book/src/star-product.md")]
    mod star_product {}
    #[doc = include_str!("../../../book/src/discretization.md")]
    mod discretization {}
    #[doc = include_str!("../../../book/src/fourier.md")]
    mod fourier {}
    #[doc = include_str!("../../../book/src/galois.md")]
    mod galois {}
    #[doc = include_str!("../../../book/src/corpus.md")]
    mod corpus {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
