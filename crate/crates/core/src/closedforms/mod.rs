//! Exact closed forms from the recurrences for log-integrals, star hooks,
//! and powers of a single argument.

pub mod data;
mod hook;
mod integrals;
mod power;
mod star;

pub use hook::{hook, hook_value, w, w_dual_check};
pub use integrals::{i_integral, j_eval, li_log_moment, li_moment, power_log_moment};
pub use power::{h_star_sum, h_sum, hurwitz_power, power_zeta, power_zeta_star};
pub use star::{known_reduction, reduce, star_hook, two_insertion_sum, unresolved, MZV_REDUCTIONS};

use crate::combinatorics::Composition;
use crate::symalg::AlgebraElement;

/// The closed form stored for the Euler sum `S_{parts, q}`, if any.
pub fn euler_closed_form(parts: &[u32], q: u32) -> Option<AlgebraElement> {
    let mut key = parts.to_vec();
    key.sort_unstable();
    data::EULER_ROWS
        .iter()
        .find(|r| r.sums.len() == 1 && r.sums[0].0 == 1 && r.sums[0].1 == key.as_slice() && r.sums[0].2 == q)
        .map(|r| r.closed_form.parse().expect("stored closed form"))
}

/// `zeta(s)` for a hook-shaped or tabulated `s`.
pub fn mzv_closed_form(s: &Composition) -> Option<AlgebraElement> {
    let parts = s.parts();
    if parts.first().is_some_and(|&h| h >= 2) && parts[1..].iter().all(|&p| p == 1) {
        return Some(hook_value(parts[0], parts.len() as u32 - 1));
    }
    known_reduction(s)
}
