//! Formal polynomials over zeta values, MZVs and linear Euler sums.

mod atom;
mod element;
mod parse;
mod transform;

pub use atom::Atom;
pub use element::{AlgebraElement, Monomial};
pub use transform::{blocks, duality, merge_even_zetas, mzv_element, star_element, star_to_mzv};
