use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::atom::Atom;
use crate::arith::Rational;
use crate::error::Result;

/// Product of atom powers; the empty product is the constant monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Atom, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn atom(a: Atom) -> Monomial {
        Monomial(vec![(a, 1)])
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Atom, u32)>) -> Monomial {
        let mut map: BTreeMap<Atom, u32> = BTreeMap::new();
        for (a, e) in factors {
            if e > 0 {
                *map.entry(a).or_insert(0) += e;
            }
        }
        Monomial(map.into_iter().collect())
    }

    pub fn factors(&self) -> &[(Atom, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().map(|(a, e)| a.weight() * e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_factors(self.0.iter().chain(other.0.iter()).cloned())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (a, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{a}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.to_string().cmp(&other.to_string()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite `Q`-linear combination of monomials; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement::default()
    }

    pub fn constant(c: Rational) -> AlgebraElement {
        AlgebraElement::term(c, Monomial::one())
    }

    pub fn term(c: Rational, m: Monomial) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        e.add_term(m, c);
        e
    }

    pub fn atom(a: Atom) -> AlgebraElement {
        AlgebraElement::term(Rational::one(), Monomial::atom(a))
    }

    /// `zeta(k)`; panics for `k < 2`.
    pub fn zeta(k: u32) -> AlgebraElement {
        AlgebraElement::atom(Atom::zeta(k).expect("k >= 2"))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term if the element has no other monomials.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> AlgebraElement {
        (0..e).fold(AlgebraElement::constant(Rational::one()), |acc, _| &acc * self)
    }

    /// Common weight of all monomials, if there is one.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let w = weights.next()?;
        weights.all(|x| x == w).then_some(w)
    }

    pub fn atoms(&self) -> Vec<Atom> {
        let mut out: Vec<Atom> =
            self.terms.keys().flat_map(|m| m.factors().iter().map(|(a, _)| a.clone())).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Replace atoms for which `f` returns a value, keep the rest.
    pub fn substitute<F>(&self, f: F) -> AlgebraElement
    where
        F: Fn(&Atom) -> Option<AlgebraElement>,
    {
        let mut out = AlgebraElement::zero();
        for (m, c) in &self.terms {
            let mut prod = AlgebraElement::constant(c.clone());
            for (a, e) in m.factors() {
                let base = f(a).unwrap_or_else(|| AlgebraElement::atom(a.clone()));
                prod = &prod * &base.pow(*e);
            }
            out = out + prod;
        }
        out
    }

    /// Fallible variant of [`AlgebraElement::substitute`].
    pub fn try_substitute<F>(&self, f: F) -> Result<AlgebraElement>
    where
        F: Fn(&Atom) -> Result<Option<AlgebraElement>>,
    {
        let mut out = AlgebraElement::zero();
        for (m, c) in &self.terms {
            let mut prod = AlgebraElement::constant(c.clone());
            for (a, e) in m.factors() {
                let base = f(a)?.unwrap_or_else(|| AlgebraElement::atom(a.clone()));
                prod = &prod * &base.pow(*e);
            }
            out = out + prod;
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        &self + &rhs
    }
}

impl Sub<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        &self - &rhs
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl Mul<&AlgebraElement> for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        &self * &rhs
    }
}

impl std::iter::Sum for AlgebraElement {
    fn sum<I: Iterator<Item = AlgebraElement>>(iter: I) -> AlgebraElement {
        iter.fold(AlgebraElement::zero(), |a, b| a + b)
    }
}
