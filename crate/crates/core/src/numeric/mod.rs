//! Series evaluation: exact head sums plus Euler-Maclaurin tails.

mod env;
mod expansion;
mod series;
mod values;

pub use env::{eval_algebra, warm_atoms, ConstantsCache, NumericEnv, CACHE_FILE, CACHE_FORMAT};
pub use series::{sum_series, sum_series_at, Factor, SeriesConfig, SeriesSpec, SummandTerm};
pub use values::{
    euler_sum, hurwitz_mzv, hurwitz_mzv_star, hurwitz_zeta, linear_sum, mzv, mzv_star, MZV_MAX_DEPTH,
    MZV_MAX_WEIGHT,
};
