use std::collections::HashMap;
use std::fmt;

use super::expansion::{fzero, to_float, Expansion};
use crate::arith::{working_bits, Float, HPReal, Rational};
use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::symalg::star_to_mzv;

/// Cutoff parameters of the series engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesConfig {
    /// Number of Euler-Maclaurin correction levels; expansions keep powers up to `n^-(2L+2)`.
    pub levels: u32,
    /// Largest summation cutoff the engine may use.
    pub n_max: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig { levels: 8, n_max: 10_000_000 }
    }
}

impl SeriesConfig {
    pub fn cut(&self) -> u32 {
        2 * self.levels + 2
    }

    /// First cutoff tried for a `digits` budget.
    pub fn initial_cutoff(&self, digits: u32) -> usize {
        let exp = (digits as f64 + 6.0) / (self.cut() as f64 - 1.0);
        (10f64.powf(exp).ceil() as usize).max(32)
    }
}

/// Per-index factor of a summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    /// Nested sum over `k1 > k2 > ...` (or `>=` when `star`) bounded by `n`
    /// (by `n - 1` when `prev`), index weights `(k + shift)^-s_i`.
    Nested { s: Composition, shift: Rational, star: bool, prev: bool },
    /// `s(n, k) / n!`
    Stirling(usize),
    /// `Y_k(n)`
    BellY(usize),
    /// `(n + shift)^-exp`
    Power { shift: Rational, exp: u32 },
}

impl Factor {
    pub fn harmonic(p: u32) -> Factor {
        Factor::mhn(Composition::from_slice(&[p]))
    }

    pub fn mhn(s: Composition) -> Factor {
        Factor::Nested { s, shift: Rational::zero(), star: false, prev: false }
    }

    pub fn mhn_prev(s: Composition) -> Factor {
        Factor::Nested { s, shift: Rational::zero(), star: false, prev: true }
    }

    pub fn mhn_star(s: Composition) -> Factor {
        Factor::Nested { s, shift: Rational::zero(), star: true, prev: false }
    }

    pub fn stirling(k: usize) -> Factor {
        Factor::Stirling(k)
    }

    pub fn bell_y(k: usize) -> Factor {
        Factor::BellY(k)
    }

    pub fn power(shift: Rational, exp: u32) -> Factor {
        Factor::Power { shift, exp }
    }

    /// Growth class `(log power, decay power)` of the factor.
    fn class(&self) -> (u32, u32) {
        match self {
            Factor::Nested { s, .. } => (s.parts().iter().take_while(|&&p| p == 1).count() as u32, 0),
            Factor::Stirling(k) => ((*k as u32).saturating_sub(1), 1),
            Factor::BellY(k) => (*k as u32, 0),
            Factor::Power { exp, .. } => (0, *exp),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Nested { s, shift, star, prev } => {
                let name = if *star { "zeta*" } else { "zeta" };
                let idx = if *prev { "n-1" } else { "n" };
                if shift.is_zero() {
                    write!(f, "{name}_{idx}({s})")
                } else {
                    write!(f, "{name}_{idx}({s};{shift})")
                }
            }
            Factor::Stirling(k) => write!(f, "s(n,{k})/n!"),
            Factor::BellY(k) => write!(f, "Y_{k}(n)"),
            Factor::Power { shift, exp } => write!(f, "(n+{shift})^-{exp}"),
        }
    }
}

/// `coeff * n^-power * prod factors`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandTerm {
    pub coeff: Rational,
    pub power: u32,
    pub factors: Vec<Factor>,
}

/// Infinite series `sum_{n>=1}` of a finite combination of summand terms.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SeriesSpec {
    terms: Vec<SummandTerm>,
}

impl SeriesSpec {
    pub fn new() -> SeriesSpec {
        SeriesSpec::default()
    }

    pub fn term(coeff: Rational, power: u32, factors: Vec<Factor>) -> SeriesSpec {
        SeriesSpec::new().with(coeff, power, factors)
    }

    pub fn with(mut self, coeff: Rational, power: u32, factors: Vec<Factor>) -> SeriesSpec {
        if !coeff.is_zero() {
            self.terms.push(SummandTerm { coeff, power, factors });
        }
        self
    }

    pub fn plus(mut self, other: SeriesSpec) -> SeriesSpec {
        self.terms.extend(other.terms);
        self
    }

    pub fn scaled(mut self, c: &Rational) -> SeriesSpec {
        for t in &mut self.terms {
            t.coeff = &t.coeff * c;
        }
        self.terms.retain(|t| !t.coeff.is_zero());
        self
    }

    pub fn terms(&self) -> &[SummandTerm] {
        &self.terms
    }

    /// Declared asymptotic class `(a, b)`: the summand is `O(ln^a n / n^b)`.
    pub fn decay(&self) -> (u32, u32) {
        let mut a = 0;
        let mut b = u32::MAX;
        for t in &self.terms {
            let (ta, tb) = t.factors.iter().fold((0, t.power), |(x, y), f| {
                let (fa, fb) = f.class();
                (x + fa, y + fb)
            });
            a = a.max(ta);
            b = b.min(tb);
        }
        (a, if b == u32::MAX { 2 } else { b })
    }

    pub fn check_convergent(&self) -> Result<()> {
        for t in &self.terms {
            let b = t.factors.iter().map(|f| f.class().1).sum::<u32>() + t.power;
            if b < 2 {
                return Err(Error::Divergent(format!("term decays like n^-{b}: {}", describe(t))));
            }
        }
        Ok(())
    }
}

fn describe(t: &SummandTerm) -> String {
    let mut s = format!("{}*n^-{}", t.coeff, t.power);
    for f in &t.factors {
        s.push('*');
        s.push_str(&f.to_string());
    }
    s
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(describe).collect();
        write!(f, "sum_n [{}]", parts.join(" + "))
    }
}

/// Tables of values for `m = 0..=n` and asymptotic expansions, all anchored at one cutoff.
struct Context {
    n: usize,
    bits: usize,
    cut: u32,
    tables: HashMap<(Composition, Rational, bool), Vec<Float>>,
    full: HashMap<(Composition, Rational), Expansion>,
    prev: HashMap<(Composition, Rational), Expansion>,
    weights: HashMap<(u32, Rational), Expansion>,
}

impl Context {
    fn new(n: usize, bits: usize, cut: u32) -> Context {
        Context {
            n,
            bits,
            cut,
            tables: HashMap::new(),
            full: HashMap::new(),
            prev: HashMap::new(),
            weights: HashMap::new(),
        }
    }

    fn one(&self) -> Float {
        Float::from(1).with_precision(self.bits).value()
    }

    fn index_weight(&self, j: usize, p: u32, shift: &Rational) -> Float {
        let base = if shift.is_zero() {
            Float::from(j).with_precision(self.bits).value()
        } else {
            to_float(&(Rational::from(j as i64) + shift), self.bits)
        };
        let mut acc = self.one();
        for _ in 0..p {
            acc *= &base;
        }
        self.one() / acc
    }

    /// `zeta_m(s; shift)` (or star) for `m = 0..=n`.
    fn table(&mut self, s: &Composition, shift: &Rational, star: bool) -> Vec<Float> {
        let key = (s.clone(), shift.clone(), star);
        if let Some(t) = self.tables.get(&key) {
            return t.clone();
        }
        let mut inner = vec![self.one(); self.n + 1];
        for &p in s.parts().iter().rev() {
            let mut outer = vec![fzero(self.bits); self.n + 1];
            for j in 1..=self.n {
                let below = if star { &inner[j] } else { &inner[j - 1] };
                let term = self.index_weight(j, p, shift) * below;
                outer[j] = &outer[j - 1] + &term;
            }
            inner = outer;
        }
        self.tables.insert(key, inner.clone());
        inner
    }

    fn weight_expansion(&mut self, p: u32, shift: &Rational) -> Expansion {
        let key = (p, shift.clone());
        if let Some(e) = self.weights.get(&key) {
            return e.clone();
        }
        let e = Expansion::shifted_power(shift, p, self.cut, self.bits);
        self.weights.insert(key, e.clone());
        e
    }

    /// Expansion of `zeta_n(s; shift)` in `n`.
    fn full_expansion(&mut self, s: &Composition, shift: &Rational) -> Expansion {
        if s.is_empty() {
            return Expansion::one(self.cut, self.bits);
        }
        let key = (s.clone(), shift.clone());
        if let Some(e) = self.full.get(&key) {
            return e.clone();
        }
        let g = self.weight_expansion(s.parts()[0], shift).mul(&self.prev_expansion(&s.tail(), shift));
        let mut e = g.partial_sums();
        let ln_n = Float::from(self.n).with_precision(self.bits).value().ln();
        let n_inv = self.one() / Float::from(self.n).with_precision(self.bits).value();
        let exact = self.table(s, shift, false)[self.n].clone();
        let c = exact - e.eval(&ln_n, &n_inv);
        e.add_term((0, 0), c);
        self.full.insert(key, e.clone());
        e
    }

    /// Expansion of `zeta_{n-1}(s; shift)` in `n`.
    fn prev_expansion(&mut self, s: &Composition, shift: &Rational) -> Expansion {
        if s.is_empty() {
            return Expansion::one(self.cut, self.bits);
        }
        let key = (s.clone(), shift.clone());
        if let Some(e) = self.prev.get(&key) {
            return e.clone();
        }
        let full = self.full_expansion(s, shift);
        let last = self.weight_expansion(s.parts()[0], shift).mul(&self.prev_expansion(&s.tail(), shift));
        let e = full.sub(&last);
        self.prev.insert(key, e.clone());
        e
    }

    fn star_expansion(&mut self, s: &Composition, shift: &Rational, prev: bool) -> Expansion {
        let mut acc = Expansion::zero(self.cut, self.bits);
        for c in star_to_mzv(s) {
            let e = if prev { self.prev_expansion(&c, shift) } else { self.full_expansion(&c, shift) };
            acc = acc.add(&e);
        }
        acc
    }

    fn factor_expansion(&mut self, f: &Factor) -> Expansion {
        match f {
            Factor::Nested { s, shift, star: false, prev: false } => self.full_expansion(s, shift),
            Factor::Nested { s, shift, star: false, prev: true } => self.prev_expansion(s, shift),
            Factor::Nested { s, shift, star: true, prev } => self.star_expansion(s, shift, *prev),
            Factor::Stirling(0) => Expansion::zero(self.cut, self.bits),
            Factor::Stirling(k) => {
                let inv = Expansion::shifted_power(&Rational::zero(), 1, self.cut, self.bits);
                self.prev_expansion(&Composition::ones(k - 1), &Rational::zero()).mul(&inv)
            }
            Factor::BellY(k) => {
                let fact = to_float(&crate::arith::factorial_q(*k as u64), self.bits);
                self.star_expansion(&Composition::ones(*k), &Rational::zero(), false).scale(&fact)
            }
            Factor::Power { shift, exp } => Expansion::shifted_power(shift, *exp, self.cut, self.bits),
        }
    }

    /// Values of the factor at `m = 1..=n` (index 0 unused).
    fn factor_values(&mut self, f: &Factor) -> Vec<Float> {
        match f {
            Factor::Nested { s, shift, star, prev } => {
                let t = self.table(s, shift, *star);
                if *prev {
                    let mut v = vec![fzero(self.bits)];
                    v.extend(t[..self.n].iter().cloned());
                    v
                } else {
                    t
                }
            }
            Factor::Stirling(0) => vec![fzero(self.bits); self.n + 1],
            Factor::Stirling(k) => {
                let t = self.table(&Composition::ones(k - 1), &Rational::zero(), false);
                let mut v = vec![fzero(self.bits)];
                for m in 1..=self.n {
                    v.push(&t[m - 1] / Float::from(m).with_precision(self.bits).value());
                }
                v
            }
            Factor::BellY(k) => {
                let t = self.table(&Composition::ones(*k), &Rational::zero(), true);
                let fact = to_float(&crate::arith::factorial_q(*k as u64), self.bits);
                t.iter().map(|x| x * &fact).collect()
            }
            Factor::Power { shift, exp } => {
                let mut v = vec![fzero(self.bits)];
                for m in 1..=self.n {
                    v.push(self.index_weight(m, *exp, shift));
                }
                v
            }
        }
    }
}

/// Head sum to `n` plus the asymptotic tail, without any stability check.
pub fn sum_series_at(spec: &SeriesSpec, digits: u32, n: usize, config: &SeriesConfig) -> Result<HPReal> {
    spec.check_convergent()?;
    let bits = working_bits(digits);
    let mut ctx = Context::new(n, bits, config.cut());
    let nf = Float::from(n).with_precision(bits).value();
    let ln_n = nf.ln();
    let n_inv = ctx.one() / nf;
    let mut total = fzero(bits);
    for t in &spec.terms {
        let coeff = to_float(&t.coeff, bits);
        let mut values: Vec<Float> = (0..=n)
            .map(|m| if m == 0 { fzero(bits) } else { ctx.index_weight(m, t.power, &Rational::zero()) })
            .collect();
        let mut exp = Expansion::shifted_power(&Rational::zero(), t.power, config.cut(), bits);
        for f in &t.factors {
            let fv = ctx.factor_values(f);
            for (v, x) in values.iter_mut().zip(fv.iter()) {
                *v = &*v * x;
            }
            exp = exp.mul(&ctx.factor_expansion(f));
        }
        let mut head = fzero(bits);
        for v in &values[1..] {
            head += v;
        }
        if let Some(b) = exp.min_power() {
            if b < 2 {
                return Err(Error::Divergent(format!("summand expansion has a term n^-{b}")));
            }
        }
        total += (head + exp.tail(&ln_n, &n_inv)) * coeff;
    }
    Ok(HPReal::from_float(total, digits))
}

/// Sum to `digits` decimal places; the cutoff is doubled until two successive
/// cutoffs agree to within `10^-digits`.
pub fn sum_series(spec: &SeriesSpec, digits: u32, config: &SeriesConfig) -> Result<HPReal> {
    spec.check_convergent()?;
    let tol = HPReal::from_rational(&Rational::from(10).pow(-(digits as i32)), digits);
    let mut n = config.initial_cutoff(digits).min(config.n_max / 2).max(1);
    let mut prev = sum_series_at(spec, digits, n, config)?;
    loop {
        if 2 * n > config.n_max {
            return Err(precision_error(digits, None));
        }
        let next = sum_series_at(spec, digits, 2 * n, config)?;
        let diff = (&next - &prev).abs();
        if diff < tol {
            return Ok(next);
        }
        if 4 * n > config.n_max {
            return Err(precision_error(digits, Some(&diff)));
        }
        n *= 2;
        prev = next;
    }
}

fn precision_error(requested: u32, diff: Option<&HPReal>) -> Error {
    let achieved = match diff {
        Some(d) if !d.is_zero() => (-d.to_f64().log10()).floor().max(0.0) as u32,
        _ => 0,
    };
    Error::Precision { requested, achieved: achieved.min(requested) }
}
