use std::cmp::Ordering;
use std::fmt;

use crate::combinatorics::Composition;
use crate::error::{domain, Result};

/// Transcendental building block of an algebra element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `zeta(k)`, `k >= 2`
    Zeta(u32),
    /// `zeta(s)` for an admissible composition of depth at least two
    Mzv(Composition),
    /// linear Euler sum `S_{p,q} = sum_n zeta_n(p) / n^q`
    Linear(u32, u32),
}

impl Atom {
    pub fn zeta(k: u32) -> Result<Atom> {
        if k < 2 {
            return Err(domain(format!("z({k}) needs k >= 2")));
        }
        Ok(Atom::Zeta(k))
    }

    /// Depth-one compositions collapse to `Zeta`.
    pub fn mzv(s: Composition) -> Result<Atom> {
        if !s.is_admissible() {
            return Err(domain(format!("m({s}) is not admissible")));
        }
        if s.depth() == 1 {
            return Ok(Atom::Zeta(s.parts()[0]));
        }
        Ok(Atom::Mzv(s))
    }

    pub fn linear(p: u32, q: u32) -> Result<Atom> {
        if p < 1 || q < 2 {
            return Err(domain(format!("S({p},{q}) needs p >= 1 and q >= 2")));
        }
        Ok(Atom::Linear(p, q))
    }

    pub fn weight(&self) -> u32 {
        match self {
            Atom::Zeta(k) => *k,
            Atom::Mzv(s) => s.weight(),
            Atom::Linear(p, q) => p + q,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Zeta(k) => write!(f, "z({k})"),
            Atom::Mzv(s) => write!(f, "m({s})"),
            Atom::Linear(p, q) => write!(f, "S({p},{q})"),
        }
    }
}

impl Ord for Atom {
    fn cmp(&self, other: &Atom) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.to_string().cmp(&other.to_string()))
    }
}

impl PartialOrd for Atom {
    fn partial_cmp(&self, other: &Atom) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
