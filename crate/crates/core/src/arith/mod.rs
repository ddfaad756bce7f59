//! Exact rationals, high-precision reals and the basic constants.

mod constants;
mod rational;
mod real;

pub use constants::{
    bernoulli, euler_gamma, euler_gamma_with_max, max_digits, riemann_zeta, riemann_zeta_with_cutoff,
    set_max_digits,
};
pub use rational::{binomial, factorial, factorial_q, Rational};
pub use real::{big_to_ibig, working_bits, Float, HPReal, DEFAULT_MAX_DIGITS, GUARD_DIGITS};
