use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{LazyLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::harmonic::harmonic;
use crate::arith::{binomial, factorial_q, Rational};
use crate::error::{Error, Result};

pub const DEFAULT_STIRLING_ROWS: usize = 256;

static ROW_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_STIRLING_ROWS);
static TRIANGLE: LazyLock<RwLock<Vec<Vec<BigUint>>>> =
    LazyLock::new(|| RwLock::new(vec![vec![BigUint::one()]]));

/// Rows beyond this index are computed on demand and not cached.
pub fn set_stirling_row_limit(rows: usize) {
    ROW_LIMIT.store(rows, Ordering::Relaxed);
}

fn next_row(prev: &[BigUint]) -> Vec<BigUint> {
    let n = prev.len() - 1;
    let mut row = vec![BigUint::zero(); n + 2];
    for k in 1..=n + 1 {
        let mut v = if k <= n { &prev[k] * BigUint::from(n) } else { BigUint::zero() };
        v += &prev[k - 1];
        row[k] = v;
    }
    row
}

/// Unsigned Stirling number of the first kind `s(n, k)`.
pub fn stirling1(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    if let Some(row) = TRIANGLE.read().unwrap().get(n) {
        return row[k].clone();
    }
    let limit = ROW_LIMIT.load(Ordering::Relaxed);
    let mut table = TRIANGLE.write().unwrap();
    while table.len() <= n.min(limit) {
        let row = next_row(table.last().unwrap());
        table.push(row);
    }
    if let Some(row) = table.get(n) {
        return row[k].clone();
    }
    let mut row = table.last().unwrap().clone();
    drop(table);
    while row.len() <= n {
        row = next_row(&row);
    }
    row[k].clone()
}

/// `s(n, k) / n!` as an exact rational.
pub fn stirling1_over_factorial(n: usize, k: usize) -> Rational {
    Rational::from_int(num_bigint::BigInt::from(stirling1(n, k))) / factorial_q(n as u64)
}

/// Complete Bell polynomial `Y_k` evaluated at the given arguments `x_1, x_2, ...`.
pub fn bell_y_with(k: usize, xs: &[Rational]) -> Result<Rational> {
    if xs.len() < k {
        return Err(Error::Arity { needed: k, got: xs.len() });
    }
    let mut y = vec![Rational::one()];
    for m in 0..k {
        let mut acc = Rational::zero();
        for i in 0..=m {
            acc += binomial(m as i64, i as i64) * &y[m - i] * &xs[i];
        }
        y.push(acc);
    }
    Ok(y.swap_remove(k))
}

/// `Y_k(n)`, the Bell polynomial at `x_r = (r-1)! zeta_n(r)`.
pub fn bell_y(k: usize, n: u64) -> Rational {
    let xs: Vec<Rational> = (1..=k)
        .map(|r| factorial_q(r as u64 - 1) * harmonic(n, r as u32).expect("r >= 1"))
        .collect();
    bell_y_with(k, &xs).expect("enough arguments")
}
