//! Compositions, multiple harmonic sums, Stirling numbers and Bell polynomials.

mod composition;
mod harmonic;
mod sequences;
mod stirling;

pub use composition::{admissible_compositions, compositions, Composition};
pub use harmonic::{harmonic, mhn, mhn_star, mhn_star_table, mhn_table, nested_sum_table};
pub use sequences::{seq_a, seq_abar, seq_b, seq_bbar};
pub use stirling::{
    bell_y, bell_y_with, set_stirling_row_limit, stirling1, stirling1_over_factorial, DEFAULT_STIRLING_ROWS,
};
