//! Multiple zeta values, Euler sums and their closed forms, evaluated exactly
//! where possible and to a requested number of digits otherwise.

pub mod arith;
pub mod closedforms;
pub mod combinatorics;
pub mod error;
pub mod numeric;
pub mod registry;
pub mod symalg;

pub use arith::{HPReal, Rational};
pub use error::{Error, Result};
