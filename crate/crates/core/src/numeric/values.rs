use super::series::{sum_series, Factor, SeriesConfig, SeriesSpec};
use crate::arith::{riemann_zeta, HPReal, Rational};
use crate::combinatorics::Composition;
use crate::error::{domain, Error, Result};
use crate::symalg::star_to_mzv;

pub const MZV_MAX_DEPTH: usize = 11;
pub const MZV_MAX_WEIGHT: u32 = 12;

fn check_mzv(s: &Composition) -> Result<()> {
    if !s.is_admissible() {
        return Err(Error::Divergent(format!("zeta({s}) is not admissible")));
    }
    if s.depth() > MZV_MAX_DEPTH || s.weight() > MZV_MAX_WEIGHT {
        return Err(Error::Unsupported(format!(
            "zeta({s}) is outside depth <= {MZV_MAX_DEPTH}, weight <= {MZV_MAX_WEIGHT}"
        )));
    }
    Ok(())
}

/// `zeta(s) = sum_n zeta_{n-1}(s2, ..., sk) / n^s1`.
pub fn mzv(s: &Composition, digits: u32, config: &SeriesConfig) -> Result<HPReal> {
    check_mzv(s)?;
    if s.depth() == 1 {
        return riemann_zeta(s.parts()[0], digits);
    }
    let spec = SeriesSpec::term(Rational::one(), s.parts()[0], vec![Factor::mhn_prev(s.tail())]);
    sum_series(&spec, digits, config)
}

/// `zeta*(s)` through its expansion into ordinary MZVs.
pub fn mzv_star(s: &Composition, digits: u32, config: &SeriesConfig) -> Result<HPReal> {
    check_mzv(s)?;
    let mut acc = HPReal::zero(digits);
    for c in star_to_mzv(s) {
        acc = acc + mzv(&c, digits + 2, config)?;
    }
    Ok(acc.with_digits(digits))
}

/// `S_{s,q} = sum_n prod_i zeta_n(s_i) / n^q`.
pub fn euler_sum(parts: &[u32], q: u32, digits: u32, config: &SeriesConfig) -> Result<HPReal> {
    if q < 2 {
        return Err(Error::Divergent(format!("Euler sum with n^-{q}")));
    }
    if parts.contains(&0) {
        return Err(domain("harmonic orders must be positive"));
    }
    let factors = parts.iter().map(|&p| Factor::harmonic(p)).collect();
    sum_series(&SeriesSpec::term(Rational::one(), q, factors), digits, config)
}

/// `S_{p,q} = sum_n zeta_n(p) / n^q`.
pub fn linear_sum(p: u32, q: u32, digits: u32, config: &SeriesConfig) -> Result<HPReal> {
    euler_sum(&[p], q, digits, config)
}

fn check_shift(a: &Rational) -> Result<()> {
    if a.is_integer() && a.is_negative() {
        return Err(domain(format!("shift {a} hits a pole")));
    }
    Ok(())
}

/// `sum_{n>=1} (n + a)^-t`.
pub fn hurwitz_zeta(t: u32, a: &Rational, digits: u32, config: &SeriesConfig) -> Result<HPReal> {
    if t < 2 {
        return Err(Error::Divergent(format!("Hurwitz zeta at t = {t}")));
    }
    check_shift(a)?;
    if a.is_zero() {
        return riemann_zeta(t, digits);
    }
    let spec = SeriesSpec::term(Rational::one(), 0, vec![Factor::power(a.clone(), t)]);
    sum_series(&spec, digits, config)
}

/// Shifted MZV `sum_{k1 > ... > km >= 1} prod (k_i + a)^-s_i`, `s1` on the largest index.
pub fn hurwitz_mzv(s: &Composition, a: &Rational, digits: u32, config: &SeriesConfig) -> Result<HPReal> {
    check_mzv(s)?;
    check_shift(a)?;
    let inner = Factor::Nested { s: s.tail(), shift: a.clone(), star: false, prev: true };
    let spec = SeriesSpec::term(Rational::one(), 0, vec![Factor::power(a.clone(), s.parts()[0]), inner]);
    sum_series(&spec, digits, config)
}

/// Star version of [`hurwitz_mzv`].
pub fn hurwitz_mzv_star(s: &Composition, a: &Rational, digits: u32, config: &SeriesConfig) -> Result<HPReal> {
    check_mzv(s)?;
    let mut acc = HPReal::zero(digits);
    for c in star_to_mzv(s) {
        acc = acc + hurwitz_mzv(&c, a, digits + 2, config)?;
    }
    Ok(acc.with_digits(digits))
}
