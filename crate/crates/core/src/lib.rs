//! Exact symbolic computation around the Carlitz q-Bernoulli numbers.
//!
//! The crate works entirely in the field of rational functions of a formal
//! variable `q` over the rationals (and, where a symbolic parameter `z` is
//! involved, in rational functions of `z` over that field). It provides:
//!
//! - [`ratfunc`]: the exact arithmetic foundation (big rationals, univariate
//!   polynomials, reduced rational functions, truncated power series);
//! - [`qcombinat`]: q-integers, q-factorials, Gaussian binomials,
//!   q-Pochhammer symbols and terminating basic hypergeometric sums;
//! - [`bernoulli`]: the q-Bernoulli numbers `beta_n` and polynomials
//!   `beta_n(z)`, the moment functional, generating-series functional
//!   equations, the Jackson q-integral and Legendre integral-moments;
//! - [`orthopoly`]: three-term recurrences and hypergeometric closed forms
//!   for the q-Hahn, big q-Legendre and big q-Jacobi families, with moment
//!   extraction;
//! - [`hankel`]: exact Hankel determinants of moment sequences and their
//!   closed-form factorizations;
//! - [`contfrac`]: J- and S-fraction expansion machinery with the closed
//!   c-coefficient sequences for the four moment generating series;
//! - [`verify`]: the batch identity-verification suite driven by the CLI and
//!   the acceptance tests.

pub mod bernoulli;
pub mod contfrac;
pub mod hankel;
pub mod orthopoly;
pub mod qcombinat;
pub mod ratfunc;
pub mod verify;

pub use bernoulli::{
    beta_number, beta_numbers, beta_poly, classical_bernoulli, legendre_moment, moment_general,
    normalization_constant, psi, BetaCache, GeneralParams,
};
pub use ratfunc::{eval_at_q, ArithError, Field, FieldQ, FieldQZ, Poly, QScalar, Rat, RatFunc, Series};
