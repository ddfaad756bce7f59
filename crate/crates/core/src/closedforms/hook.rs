use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::arith::{binomial, factorial_q, Rational};
use crate::error::{Error, Result};
use crate::symalg::{merge_even_zetas, AlgebraElement};

fn z(k: u32) -> AlgebraElement {
    AlgebraElement::zeta(k)
}

fn fact(n: u32) -> Rational {
    factorial_q(n as u64)
}

/// `psi^(n)(1) = (-1)^(n+1) n! zeta(n+1)`, `n >= 1`.
fn psi1(n: u32) -> AlgebraElement {
    z(n + 1).scale(&(Rational::sign(n as i64 + 1) * fact(n)))
}

/// `zeta(3, {1}_j) = (j+2)/2 zeta(j+3) - 1/2 sum_{k=1}^{j} zeta(k+1) zeta(j+2-k)`
fn zeta3_ones(j: u32) -> AlgebraElement {
    let mut e = z(j + 3).scale(&Rational::new(j as i64 + 2, 2));
    for k in 1..=j {
        e = e - (&z(k + 1) * &z(j + 2 - k)).scale(&Rational::new(1, 2));
    }
    e
}

fn w_cache() -> &'static RwLock<HashMap<(u32, u32), AlgebraElement>> {
    static CACHE: OnceLock<RwLock<HashMap<(u32, u32), AlgebraElement>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn w_raw(m: u32, k: u32) -> AlgebraElement {
    if let Some(e) = w_cache().read().unwrap().get(&(m, k)) {
        return e.clone();
    }
    let e = if k == 0 {
        z(m + 1).scale(&(Rational::sign(m as i64) * fact(m)))
    } else if m == 1 {
        z(k + 2).scale(&(Rational::sign(k as i64 + 1) * fact(k)))
    } else if k == 1 {
        zeta3_ones(m - 1).scale(&(Rational::sign(m as i64 + 1) * fact(m)))
    } else {
        let mut e = -psi1(m + k).scale(&Rational::new(1, k as i64 + 1));
        for i in 1..m {
            for j in 0..k {
                let c = binomial(m as i64 - 1, i as i64) * binomial(k as i64, j as i64);
                e = e - (&w_raw(i, j) * &psi1(m + k - i - j - 1)).scale(&c);
            }
        }
        e
    };
    let e = merge_even_zetas(&e);
    w_cache().write().unwrap().insert((m, k), e.clone());
    e
}

/// `W(m, k) = int_0^1 ln^k(1-x) ln^m(x) / (1-x) dx` as a polynomial in zeta values.
pub fn w(m: u32, k: u32) -> Result<AlgebraElement> {
    if m == 0 {
        return Err(Error::Parameter("W(m, k) needs m >= 1".into()));
    }
    Ok(w_raw(m, k))
}

/// `zeta(m+2, {1}_{k-1})` as a polynomial in zeta values.
pub fn hook(m: u32, k: u32) -> Result<AlgebraElement> {
    if k == 0 {
        return Err(Error::Parameter("hook(m, k) needs k >= 1".into()));
    }
    let c = Rational::sign((m + k) as i64) / (fact(m) * fact(k));
    Ok(w_raw(k, m).scale(&c))
}

/// `zeta(head, {1}_ones)` for `head >= 2`.
pub fn hook_value(head: u32, ones: u32) -> AlgebraElement {
    assert!(head >= 2, "hook_value needs head >= 2");
    w_raw(ones + 1, head - 2).scale(&(Rational::sign((head + ones - 1) as i64) / (fact(head - 2) * fact(ones + 1))))
}

/// `W(m, k-1) == m/k W(k, m-1)`, compared exactly.
pub fn w_dual_check(m: u32, k: u32) -> Result<bool> {
    if m == 0 || k == 0 {
        return Err(Error::Parameter("W duality needs m, k >= 1".into()));
    }
    Ok(w_raw(m, k - 1) == w_raw(k, m - 1).scale(&Rational::new(m as i64, k as i64)))
}
