use super::composition::Composition;
use crate::arith::Rational;
use crate::error::{domain, Result};

/// `zeta_n(p) = sum_{j=1}^n j^-p`; `zeta_0(p) = 0`.
pub fn harmonic(n: u64, p: u32) -> Result<Rational> {
    if p < 1 {
        return Err(domain(format!("harmonic order {p} must be at least 1")));
    }
    Ok((1..=n as i64).map(|j| Rational::new(1, j).pow(p as i32)).sum())
}

/// Table of `zeta_m(s)` (or the star version) for `m = 0..=n_max`, with the
/// weight of index `j` given by `weight(j, s_i)`.
pub fn nested_sum_table<W>(n_max: usize, s: &Composition, star: bool, weight: W) -> Vec<Rational>
where
    W: Fn(usize, u32) -> Rational,
{
    let mut inner = vec![Rational::one(); n_max + 1];
    for &part in s.parts().iter().rev() {
        let mut outer = vec![Rational::zero(); n_max + 1];
        for j in 1..=n_max {
            let below = if star { &inner[j] } else { &inner[j - 1] };
            let term = if below.is_zero() { Rational::zero() } else { weight(j, part) * below };
            outer[j] = &outer[j - 1] + &term;
        }
        inner = outer;
    }
    inner
}

fn plain_weight(j: usize, p: u32) -> Rational {
    Rational::new(1, j as i64).pow(p as i32)
}

/// Values `zeta_m(s)` for `m = 0..=n_max`.
pub fn mhn_table(n_max: usize, s: &Composition) -> Vec<Rational> {
    nested_sum_table(n_max, s, false, plain_weight)
}

/// Values `zeta*_m(s)` for `m = 0..=n_max`.
pub fn mhn_star_table(n_max: usize, s: &Composition) -> Vec<Rational> {
    nested_sum_table(n_max, s, true, plain_weight)
}

/// Multiple harmonic sum `sum_{n >= n1 > ... > nk >= 1} prod n_i^-s_i`.
pub fn mhn(n: u64, s: &Composition) -> Rational {
    mhn_table(n as usize, s).pop().unwrap()
}

/// Multiple harmonic star sum, weak inequalities `n >= n1 >= ... >= nk >= 1`.
pub fn mhn_star(n: u64, s: &Composition) -> Rational {
    mhn_star_table(n as usize, s).pop().unwrap()
}
