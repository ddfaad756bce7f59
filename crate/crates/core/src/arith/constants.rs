use std::collections::HashMap;
use std::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};
use std::sync::{LazyLock, Mutex, RwLock};

use super::rational::{binomial, factorial_q, Rational};
use super::real::{HPReal, DEFAULT_MAX_DIGITS, GUARD_DIGITS};
use crate::error::{domain, Error, Result};

static BERNOULLI: LazyLock<RwLock<Vec<Rational>>> =
    LazyLock::new(|| RwLock::new(vec![Rational::one()]));

/// Bernoulli number `B_k` with the convention `B_1 = -1/2`.
pub fn bernoulli(k: usize) -> Rational {
    if let Some(b) = BERNOULLI.read().unwrap().get(k) {
        return b.clone();
    }
    let mut table = BERNOULLI.write().unwrap();
    while table.len() <= k {
        let n = table.len();
        if n > 1 && n % 2 == 1 {
            table.push(Rational::zero());
            continue;
        }
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += binomial(n as i64 + 1, j as i64) * b;
            }
        }
        table.push(-acc / Rational::from(n as i64 + 1));
    }
    table[k].clone()
}

fn check_budget(digits: u32, max: u32) -> Result<()> {
    if digits > max {
        return Err(Error::Precision { requested: digits, achieved: max });
    }
    Ok(())
}

fn epsilon(digits: u32) -> HPReal {
    HPReal::from_rational(&Rational::from(10).pow(-((digits + GUARD_DIGITS) as i32)), digits)
}

static MAX_DIGITS: AtomicU32 = AtomicU32::new(DEFAULT_MAX_DIGITS);

/// Current ceiling on digit budgets accepted by the constant routines.
pub fn max_digits() -> u32 {
    MAX_DIGITS.load(AtomicOrdering::Relaxed)
}

pub fn set_max_digits(max: u32) {
    MAX_DIGITS.store(max, AtomicOrdering::Relaxed);
}

pub fn euler_gamma(digits: u32) -> Result<HPReal> {
    euler_gamma_with_max(digits, max_digits())
}

/// Euler's constant from `H_N - ln N` with the Euler-Maclaurin correction.
pub fn euler_gamma_with_max(digits: u32, max_digits: u32) -> Result<HPReal> {
    check_budget(digits, max_digits)?;
    let n = (digits as i64 + 10).max(10);
    let nn = HPReal::from_i64(n, digits);
    let mut acc = HPReal::zero(digits);
    for k in 1..=n {
        acc = acc + HPReal::from_rational(&Rational::new(1, k), digits);
    }
    acc = acc - nn.ln()? - HPReal::from_rational(&Rational::new(1, 2 * n), digits);
    let eps = epsilon(digits);
    for k in 1..=(4 * n as usize) {
        let c = bernoulli(2 * k) / Rational::from(2 * k as i64) / Rational::from(n).pow(2 * k as i32);
        let term = HPReal::from_rational(&c, digits);
        acc = acc + &term;
        if term.abs() < eps {
            break;
        }
    }
    Ok(acc)
}

static ZETA_MEMO: LazyLock<Mutex<HashMap<(u32, u32), HPReal>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Riemann zeta at an integer `k >= 2`, memoized per `(k, digits)`.
pub fn riemann_zeta(k: u32, digits: u32) -> Result<HPReal> {
    if k < 2 {
        return Err(domain(format!("zeta({k}) requires k >= 2")));
    }
    check_budget(digits, max_digits())?;
    if let Some(v) = ZETA_MEMO.lock().unwrap().get(&(k, digits)) {
        return Ok(v.clone());
    }
    let v = riemann_zeta_with_cutoff(k, digits, (digits as u64 + 10).max(12))?;
    ZETA_MEMO.lock().unwrap().insert((k, digits), v.clone());
    Ok(v)
}

/// Zeta with an explicit summation cutoff `n`; the tail is Euler-Maclaurin.
pub fn riemann_zeta_with_cutoff(k: u32, digits: u32, n: u64) -> Result<HPReal> {
    if k < 2 {
        return Err(domain(format!("zeta({k}) requires k >= 2")));
    }
    let n = n.max(2) as i64;
    let mut acc = HPReal::zero(digits);
    for m in 1..n {
        acc = acc + HPReal::from_rational(&Rational::new(1, m).pow(k as i32), digits);
    }
    let nq = Rational::from(n);
    let head = nq.pow(1 - k as i32) / Rational::from(k as i64 - 1) + nq.pow(-(k as i32)) / Rational::from(2);
    acc = acc + HPReal::from_rational(&head, digits);
    let eps = epsilon(digits);
    let mut rising = Rational::from(k as i64);
    for j in 1..=(4 * n as usize) {
        if j > 1 {
            let a = (k as i64) + 2 * j as i64 - 3;
            rising = rising * Rational::from(a) * Rational::from(a + 1);
        }
        let c = bernoulli(2 * j) / factorial_q(2 * j as u64) * &rising
            * nq.pow(-(k as i32) - 2 * j as i32 + 1);
        let term = HPReal::from_rational(&c, digits);
        acc = acc + &term;
        if term.abs() < eps {
            break;
        }
    }
    Ok(acc)
}
