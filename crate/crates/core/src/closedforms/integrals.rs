use std::collections::HashMap;

use crate::arith::{binomial, factorial_q, HPReal, Rational, GUARD_DIGITS};
use crate::combinatorics::harmonic;
use crate::error::{domain, Error, Result};
use crate::symalg::AlgebraElement;

fn z(k: u32) -> AlgebraElement {
    AlgebraElement::zeta(k)
}

fn q(r: Rational) -> AlgebraElement {
    AlgebraElement::constant(r)
}

fn fact(n: u32) -> Rational {
    factorial_q(n as u64)
}

fn npow(n: u64, e: u32) -> Rational {
    Rational::from(n as i64).pow(e as i32)
}

/// `zeta_n(t)`
fn zn(n: u64, t: u32) -> Rational {
    harmonic(n, t).expect("t >= 1")
}

/// `zeta_n(t) - zeta(t)` for `t >= 2`.
fn zn_minus_z(n: u64, t: u32) -> AlgebraElement {
    q(zn(n, t)) - z(t)
}

struct IntegralTable {
    n: u64,
    memo: HashMap<(u32, u32), AlgebraElement>,
}

impl IntegralTable {
    fn get(&mut self, m: u32, k: u32) -> AlgebraElement {
        if let Some(e) = self.memo.get(&(m, k)) {
            return e.clone();
        }
        let n = self.n;
        let e = if k == 0 {
            q(Rational::sign(m as i64) * fact(m) / npow(n, m + 1))
        } else if m == 0 {
            let mut e = AlgebraElement::zero();
            for i in 0..k {
                let c = Rational::sign((k - i) as i64) * fact(k - i - 1) * binomial(k as i64 - 1, i as i64);
                e = e + self.get(0, i).scale(&(c * zn(n, k - i)));
            }
            e
        } else {
            let mut e = AlgebraElement::zero();
            for i in 0..m {
                let c = binomial(m as i64 - 1, i as i64) * fact(m - i - 1) * Rational::sign((m - i) as i64)
                    / npow(n, m - i);
                e = e + self.get(i, k).scale(&c);
            }
            for i in 0..m {
                for j in 0..k {
                    let t = m + k - i - j;
                    let c = binomial(m as i64 - 1, i as i64)
                        * binomial(k as i64, j as i64)
                        * Rational::sign(t as i64)
                        * fact(t - 1);
                    e = e + (&zn_minus_z(n, t) * &self.get(i, j)).scale(&c);
                }
            }
            e
        };
        self.memo.insert((m, k), e.clone());
        e
    }
}

/// `I(n, m, k) = int_0^1 x^(n-1) ln^m(x) ln^k(1-x) dx`, exact in zeta values.
pub fn i_integral(n: u64, m: u32, k: u32) -> Result<AlgebraElement> {
    if n == 0 {
        return Err(Error::Parameter("I(n, m, k) needs n >= 1".into()));
    }
    Ok(IntegralTable { n, memo: HashMap::new() }.get(m, k))
}

/// Weak nested sums `T_r = sum_{n >= k1 >= ... >= kr >= 1} x^kr / (k1 ... kr)` for `r = 0..=depth`.
fn weak_power_sums(n: u64, depth: u32, x: &Rational) -> Vec<Rational> {
    let mut out = vec![Rational::one()];
    let mut level: Vec<Rational> = Vec::with_capacity(n as usize);
    let mut xk = Rational::one();
    for k in 1..=n {
        xk = &xk * x;
        level.push(&xk / &Rational::from(k as i64));
    }
    for r in 1..=depth {
        if r > 1 {
            let mut acc = Rational::zero();
            for (idx, v) in level.iter_mut().enumerate() {
                acc += v.clone();
                *v = &acc / &Rational::from(idx as i64 + 1);
            }
        }
        out.push(level.iter().sum());
    }
    out
}

/// `J(n, m; x) = int_0^x t^(n-1) ln^m(1-t) dt` for rational `x` in `[-1, 1)`.
pub fn j_eval(n: u64, m: u32, x: &Rational, digits: u32) -> Result<HPReal> {
    if n == 0 {
        return Err(Error::Parameter("J(n, m; x) needs n >= 1".into()));
    }
    if *x >= Rational::one() || *x < Rational::from(-1) {
        return Err(domain(format!(
            "J(n, m; x) needs -1 <= x < 1, got {x}; the x = 1 value is I(n, 0, m)"
        )));
    }
    let d = digits + GUARD_DIGITS;
    let nq = Rational::from(n as i64);
    let xn = x.pow(n as i32);
    if m == 0 {
        return Ok(HPReal::from_rational(&(&xn / &nq), digits));
    }
    let ln1mx = HPReal::from_rational(&(Rational::one() - x), d).ln()?;
    let tx = weak_power_sums(n, m, x);
    let t1 = weak_power_sums(n, m, &Rational::one());
    let mut acc = ln1mx.powi(m) * HPReal::from_rational(&((&xn - &Rational::one()) / &nq), d);
    let lead = Rational::sign(m as i64) * fact(m) * &tx[m as usize] / &nq;
    acc = acc + HPReal::from_rational(&lead, d);
    for i in 1..m {
        let c = Rational::sign(i as i64 - 1) * fact(i) * binomial(m as i64, i as i64) * (&tx[i as usize] - &t1[i as usize])
            / &nq;
        acc = acc - ln1mx.powi(m - i) * HPReal::from_rational(&c, d);
    }
    Ok(acc.with_digits(digits))
}

/// `int_0^x t^(n-1) ln^m(t) dt` for rational `x` in `(0, 1]`.
pub fn power_log_moment(n: u64, m: u32, x: &Rational, digits: u32) -> Result<HPReal> {
    if n == 0 {
        return Err(Error::Parameter("the power-log moment needs n >= 1".into()));
    }
    if *x <= Rational::zero() || *x > Rational::one() {
        return Err(domain(format!("the power-log moment needs 0 < x <= 1, got {x}")));
    }
    let d = digits + GUARD_DIGITS;
    let lnx = HPReal::from_rational(x, d).ln()?;
    let xn = x.pow(n as i32);
    let mut acc = HPReal::zero(d);
    for l in 0..=m {
        let c = fact(l) * binomial(m as i64, l as i64) * Rational::sign(l as i64) * &xn / npow(n, l + 1);
        acc = acc + lnx.powi(m - l) * HPReal::from_rational(&c, d);
    }
    Ok(acc.with_digits(digits))
}

/// `int_0^1 x^(n-1) Li_p(x) dx`
pub fn li_moment(n: u64, p: u32) -> Result<AlgebraElement> {
    if n == 0 || p == 0 {
        return Err(Error::Parameter("the Li moment needs n, p >= 1".into()));
    }
    let mut e = AlgebraElement::zero();
    for i in 1..p {
        e = e + z(p + 1 - i).scale(&(Rational::sign(i as i64 - 1) / npow(n, i)));
    }
    Ok(e + q(Rational::sign(p as i64 - 1) * zn(n, 1) / npow(n, p)))
}

/// `int_0^1 x^(n-1) ln^m(x) Li_p(x) dx`, by recursion on `m`.
pub fn li_log_moment(n: u64, m: u32, p: u32) -> Result<AlgebraElement> {
    if m == 0 {
        return li_moment(n, p);
    }
    if n == 0 || p == 0 {
        return Err(Error::Parameter("the Li moment needs n, p >= 1".into()));
    }
    let mut e = AlgebraElement::zero();
    for i in 1..p {
        let c = Rational::from(m as i64) * Rational::sign(i as i64) / npow(n, i);
        e = e + li_log_moment(n, m - 1, p + 1 - i)?.scale(&c);
    }
    let c = fact(m) * Rational::sign((m + p - 1) as i64) / npow(n, p);
    let mut inner = q(zn(n, m + 1) + zn(n, 1) / npow(n, m)) - z(m + 1);
    for j in 1..m {
        inner = inner + zn_minus_z(n, j + 1).scale(&npow(n, m - j).recip());
    }
    Ok(e + inner.scale(&c))
}
