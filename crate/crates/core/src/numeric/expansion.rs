use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, Mutex};

use crate::arith::{bernoulli, big_to_ibig, factorial_q, Float, Rational};

pub(crate) fn to_float(r: &Rational, bits: usize) -> Float {
    let n = Float::from(big_to_ibig(r.numer())).with_precision(bits).value();
    let d = Float::from(big_to_ibig(r.denom())).with_precision(bits).value();
    n / d
}

pub(crate) fn fzero(bits: usize) -> Float {
    Float::from(0).with_precision(bits).value()
}

/// Exact asymptotic expansion `sum c[a,b] ln^a(x) x^-b`.
type RatSeries = BTreeMap<(u32, u32), Rational>;

fn rat_add(acc: &mut RatSeries, key: (u32, u32), c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(key).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&key);
    }
}

fn derivative(f: &RatSeries) -> RatSeries {
    let mut out = RatSeries::new();
    for (&(a, b), c) in f {
        if a > 0 {
            rat_add(&mut out, (a - 1, b + 1), c * Rational::from(a as i64));
        }
        if b > 0 {
            rat_add(&mut out, (a, b + 1), -(c * Rational::from(b as i64)));
        }
    }
    out
}

/// Antiderivative of `ln^a x * x^-b` for `b >= 1`, without constant.
fn antiderivative(a: u32, b: u32) -> RatSeries {
    let mut out = RatSeries::new();
    if b == 1 {
        rat_add(&mut out, (a + 1, 0), Rational::new(1, a as i64 + 1));
        return out;
    }
    let one_minus_b = Rational::from(1 - b as i64);
    let mut falling = Rational::one();
    for j in 0..=a {
        let c = Rational::sign(j as i64) * &falling / one_minus_b.pow(j as i32 + 1);
        rat_add(&mut out, (a - j, b - 1), c);
        falling *= Rational::from((a - j) as i64);
    }
    out
}

type PartialMemo = HashMap<(u32, u32, u32), RatSeries>;

static PARTIAL: LazyLock<Mutex<PartialMemo>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Non-constant part of the Euler-Maclaurin expansion of
/// `sum_{m<=x} ln^a m * m^-b`, keeping powers up to `x^-cut`.
fn partial_sum(a: u32, b: u32, cut: u32) -> RatSeries {
    if let Some(s) = PARTIAL.lock().unwrap().get(&(a, b, cut)) {
        return s.clone();
    }
    let mut out = antiderivative(a, b);
    out.retain(|&(_, bb), _| bb <= cut);
    let mut f = RatSeries::new();
    f.insert((a, b), Rational::one());
    if b <= cut {
        rat_add(&mut out, (a, b), Rational::new(1, 2));
    }
    let mut d = derivative(&f);
    let mut k = 1usize;
    while b + 2 * k as u32 - 1 <= cut {
        let c = bernoulli(2 * k) / factorial_q(2 * k as u64);
        for (&key, v) in &d {
            rat_add(&mut out, key, &c * v);
        }
        d = derivative(&derivative(&d));
        k += 1;
    }
    PARTIAL.lock().unwrap().insert((a, b, cut), out.clone());
    out
}

/// Truncated asymptotic expansion in `ln^a n * n^-b` with float coefficients.
#[derive(Clone, Debug)]
pub(crate) struct Expansion {
    terms: BTreeMap<(u32, u32), Float>,
    cut: u32,
    bits: usize,
}

impl Expansion {
    pub fn zero(cut: u32, bits: usize) -> Expansion {
        Expansion { terms: BTreeMap::new(), cut, bits }
    }

    pub fn constant(c: Float, cut: u32, bits: usize) -> Expansion {
        let mut e = Expansion::zero(cut, bits);
        e.add_term((0, 0), c);
        e
    }

    pub fn one(cut: u32, bits: usize) -> Expansion {
        Expansion::constant(Float::from(1).with_precision(bits).value(), cut, bits)
    }

    pub fn add_term(&mut self, key: (u32, u32), c: Float) {
        if key.1 > self.cut {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(v) => *v += c,
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// `(n + shift)^-e` expanded in powers of `1/n`.
    pub fn shifted_power(shift: &Rational, e: u32, cut: u32, bits: usize) -> Expansion {
        let mut out = Expansion::zero(cut, bits);
        let mut coeff = Rational::one();
        let mut j = 0u32;
        while e + j <= cut {
            if !coeff.is_zero() || j == 0 {
                out.add_term((0, e + j), to_float(&coeff, bits));
            }
            // C(-e, j+1) a^(j+1) from C(-e, j) a^j
            coeff = coeff * Rational::from(-(e as i64) - j as i64) / Rational::from(j as i64 + 1) * shift;
            j += 1;
            if shift.is_zero() {
                break;
            }
        }
        out
    }

    pub fn add(&self, other: &Expansion) -> Expansion {
        let mut out = self.clone();
        for (&k, v) in &other.terms {
            out.add_term(k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Expansion) -> Expansion {
        let mut out = self.clone();
        for (&k, v) in &other.terms {
            out.add_term(k, -v.clone());
        }
        out
    }

    pub fn scale(&self, c: &Float) -> Expansion {
        Expansion {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
            cut: self.cut,
            bits: self.bits,
        }
    }

    pub fn mul(&self, other: &Expansion) -> Expansion {
        let mut out = Expansion::zero(self.cut, self.bits);
        for (&(a1, b1), v1) in &self.terms {
            for (&(a2, b2), v2) in &other.terms {
                if b1 + b2 <= self.cut {
                    out.add_term((a1 + a2, b1 + b2), v1 * v2);
                }
            }
        }
        out
    }

    pub fn eval(&self, ln_n: &Float, n_inv: &Float) -> Float {
        let max_a = self.terms.keys().map(|k| k.0).max().unwrap_or(0);
        let mut lp = vec![Float::from(1).with_precision(self.bits).value()];
        for i in 0..max_a as usize {
            lp.push(&lp[i] * ln_n);
        }
        let mut np = vec![Float::from(1).with_precision(self.bits).value()];
        for i in 0..self.cut as usize {
            np.push(&np[i] * n_inv);
        }
        let mut acc = fzero(self.bits);
        for (&(a, b), v) in &self.terms {
            acc += v * &lp[a as usize] * &np[b as usize];
        }
        acc
    }

    /// Non-constant part of the expansion of `sum_{m<=n} g(m)` where `self` expands `g`.
    pub fn partial_sums(&self) -> Expansion {
        let mut out = Expansion::zero(self.cut, self.bits);
        for (&(a, b), v) in &self.terms {
            assert!(b >= 1, "partial sums need summands decaying at least like 1/m");
            for (&k, c) in &partial_sum(a, b, self.cut) {
                out.add_term(k, v * to_float(c, self.bits));
            }
        }
        out
    }

    /// `sum_{m>N} g(m)` for the expanded `g`, all of whose powers are at least 2.
    pub fn tail(&self, ln_n: &Float, n_inv: &Float) -> Float {
        -self.partial_sums().eval(ln_n, n_inv)
    }

    pub fn min_power(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).min()
    }
}
