use crate::arith::{HPReal, Rational};
use crate::error::{Error, Result};
use crate::numeric::{hurwitz_zeta, SeriesConfig};
use crate::symalg::AlgebraElement;

fn z(k: u32) -> AlgebraElement {
    AlgebraElement::zeta(k)
}

fn check_p(p: u32) -> Result<()> {
    if p < 2 {
        return Err(Error::Divergent(format!("zeta({{{p}}}_m) diverges for p < 2")));
    }
    Ok(())
}

/// `zeta({p}_i)` for `i = 0..=m`, or the star values.
fn power_table(p: u32, m: u32, star: bool) -> Vec<AlgebraElement> {
    let mut out = vec![AlgebraElement::constant(Rational::one())];
    for k in 1..=m {
        let mut e = AlgebraElement::zero();
        for (i, prev) in out.iter().enumerate() {
            let sign = if star { Rational::one() } else { Rational::sign(i as i64) };
            e = e + (prev * &z(p * (k - i as u32))).scale(&sign);
        }
        let c = if star { Rational::new(1, k as i64) } else { Rational::sign(k as i64 - 1) / Rational::from(k as i64) };
        out.push(e.scale(&c));
    }
    out
}

/// `zeta({p}_m)`
pub fn power_zeta(p: u32, m: u32) -> Result<AlgebraElement> {
    check_p(p)?;
    Ok(power_table(p, m, false).pop().unwrap())
}

/// `zeta*({p}_m)`
pub fn power_zeta_star(p: u32, m: u32) -> Result<AlgebraElement> {
    check_p(p)?;
    Ok(power_table(p, m, true).pop().unwrap())
}

/// `zeta({p}_m; a+1)` (or its star version) evaluated through the power
/// recurrence in Hurwitz zeta values `zeta(t, a+1)`.
pub fn hurwitz_power(p: u32, m: u32, a: &Rational, star: bool, digits: u32, config: &SeriesConfig) -> Result<HPReal> {
    check_p(p)?;
    let d = digits + 4;
    let mut vals = vec![HPReal::from_i64(1, d)];
    for k in 1..=m {
        let mut acc = HPReal::zero(d);
        for (i, prev) in vals.iter().enumerate() {
            let t = prev * &hurwitz_zeta(p * (k - i as u32), a, d, config)?;
            acc = if star || i % 2 == 0 { acc + t } else { acc - t };
        }
        let c = if star || k % 2 == 1 { 1 } else { -1 };
        vals.push(acc / HPReal::from_i64(c * k as i64, d));
    }
    Ok(vals.pop().unwrap().with_digits(digits))
}

/// `H(m, p) = sum_{a+b=m-1} zeta({p}_a, p+1, {p}_b)`
pub fn h_sum(m: u32, p: u32) -> Result<AlgebraElement> {
    h_table(m, p, false)
}

/// `H*(m, p) = sum_{a+b=m-1} zeta*({p}_a, p+1, {p}_b)`
pub fn h_star_sum(m: u32, p: u32) -> Result<AlgebraElement> {
    h_table(m, p, true)
}

fn h_table(m: u32, p: u32, star: bool) -> Result<AlgebraElement> {
    check_p(p)?;
    if m == 0 {
        return Err(Error::Parameter("H(m, p) needs m >= 1".into()));
    }
    let powers = power_table(p, m, star);
    let mut hs: Vec<AlgebraElement> = Vec::new();
    for k in 1..=m {
        let outer = if star { Rational::one() } else { Rational::sign(k as i64 - 1) };
        let mut sum = AlgebraElement::zero();
        for i in 1..k {
            let sign = if star { Rational::one() } else { Rational::sign(i as i64) };
            let a = &z(p * (k - i)) * &hs[i as usize - 1];
            let b = (&z(p * (k - i) + 1) * &powers[i as usize]).scale(&Rational::from((k - i) as i64));
            sum = sum + (a + b).scale(&sign);
        }
        let e = z(p * k + 1).scale(&outer) + sum.scale(&(outer / Rational::from(k as i64)));
        hs.push(e);
    }
    Ok(hs.pop().unwrap())
}
