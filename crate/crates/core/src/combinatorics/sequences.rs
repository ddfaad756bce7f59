use crate::arith::{factorial_q, Rational};
use crate::error::{Error, Result};

fn check(n: usize, xs: &[Rational]) -> Result<()> {
    if xs.len() < n {
        return Err(Error::Arity { needed: n, got: xs.len() });
    }
    Ok(())
}

/// Power sums `X(r) = sum_{k<=n} x_k^r` for `r = 0..=m`.
fn power_sums(m: usize, n: usize, xs: &[Rational]) -> Vec<Rational> {
    (0..=m).map(|r| xs[..n].iter().map(|x| x.pow(r as i32)).sum()).collect()
}

/// `A_m(n)` by its defining recurrence over power sums.
pub fn seq_a(m: usize, n: usize, xs: &[Rational]) -> Result<Rational> {
    check(n, xs)?;
    let x = power_sums(m, n, xs);
    let mut a = vec![Rational::one()];
    for k in 1..=m {
        let mut acc = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            acc += ai / factorial_q(i as u64) * &x[k - i];
        }
        a.push(factorial_q(k as u64 - 1) * acc);
    }
    Ok(a.swap_remove(m))
}

/// `Abar_m(n)`, the alternating variant of `A`.
pub fn seq_abar(m: usize, n: usize, xs: &[Rational]) -> Result<Rational> {
    check(n, xs)?;
    let x = power_sums(m, n, xs);
    let mut a = vec![Rational::one()];
    for k in 1..=m {
        let mut acc = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            acc += Rational::sign(i as i64) * ai / factorial_q(i as u64) * &x[k - i];
        }
        a.push(Rational::sign(k as i64 - 1) * factorial_q(k as u64 - 1) * acc);
    }
    Ok(a.swap_remove(m))
}

fn nested(m: usize, n: usize, xs: &[Rational], strict: bool) -> Result<Rational> {
    check(n, xs)?;
    // level[j] holds the depth-d sum over indices bounded by j
    let mut level = vec![Rational::one(); n + 1];
    for _ in 0..m {
        let mut next = vec![Rational::zero(); n + 1];
        for j in 1..=n {
            let below = if strict { &level[j - 1] } else { &level[j] };
            next[j] = &next[j - 1] + &xs[j - 1] * below;
        }
        level = next;
    }
    Ok(level.swap_remove(n))
}

/// `B_m(n) = sum_{n >= k1 >= ... >= km >= 1} x_k1 ... x_km`.
pub fn seq_b(m: usize, n: usize, xs: &[Rational]) -> Result<Rational> {
    nested(m, n, xs, false)
}

/// `Bbar_m(n)`, the strict nested sum.
pub fn seq_bbar(m: usize, n: usize, xs: &[Rational]) -> Result<Rational> {
    nested(m, n, xs, true)
}
