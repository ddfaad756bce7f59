use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Ordered tuple of positive integers, the index set of a multiple zeta value.
/// `(s1, s2, ..., sk)` puts `s1` on the largest summation index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Parameter(format!("composition part {pos} is zero")));
        }
        Ok(Composition(parts))
    }

    pub fn from_slice(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).expect("positive parts")
    }

    pub fn empty() -> Composition {
        Composition(Vec::new())
    }

    /// `{a}_k`
    pub fn repeat(a: u32, k: usize) -> Composition {
        Composition::from_slice(&vec![a; k])
    }

    pub fn ones(k: usize) -> Composition {
        Composition::repeat(1, k)
    }

    /// `(head, {1}_ones)`
    pub fn hook(head: u32, ones: usize) -> Composition {
        let mut v = vec![head];
        v.extend(std::iter::repeat_n(1, ones));
        Composition::from_slice(&v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.first().is_some_and(|&s| s >= 2)
    }

    pub fn tail(&self) -> Composition {
        Composition(self.0.get(1..).unwrap_or_default().to_vec())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Composition(v)
    }

    pub fn push(&mut self, part: u32) {
        assert!(part > 0, "composition parts are positive");
        self.0.push(part);
    }

    pub fn extend_repeat(&mut self, a: u32, k: usize) {
        for _ in 0..k {
            self.push(a);
        }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let a = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == a {
                j += 1;
            }
            let run = j - i;
            let pieces: Vec<String> = if run >= 3 {
                vec![format!("{{{a}}}_{run}")]
            } else {
                vec![a.to_string(); run]
            };
            for p in pieces {
                if !first {
                    f.write_str(",")?;
                }
                f.write_str(&p)?;
                first = false;
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `6,1,1`, `4,{1}_5` and an optional pair of enclosing parentheses.
    fn from_str(text: &str) -> Result<Composition> {
        let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
        let mut body = text;
        let mut offset = 0;
        let trimmed = text.trim();
        if trimmed.starts_with('(') && trimmed.ends_with(')') {
            offset = text.find('(').unwrap() + 1;
            body = &text[offset..text.rfind(')').unwrap()];
        }
        let mut parts = Vec::new();
        if body.trim().is_empty() {
            return Ok(Composition::empty());
        }
        let mut pos = offset;
        for piece in body.split(',') {
            let p = piece.trim();
            let at = pos + (piece.len() - piece.trim_start().len());
            if let Some(rest) = p.strip_prefix('{') {
                let (inner, count) = rest
                    .split_once("}_")
                    .ok_or_else(|| err(at, "expected a block of the form {a}_k"))?;
                let a: u32 = inner.trim().parse().map_err(|_| err(at + 1, "invalid block part"))?;
                let k: usize = count
                    .trim()
                    .parse()
                    .map_err(|_| err(at + inner.len() + 3, "invalid block length"))?;
                if a == 0 {
                    return Err(err(at + 1, "parts must be positive"));
                }
                parts.extend(std::iter::repeat_n(a, k));
            } else {
                let a: u32 = p.parse().map_err(|_| err(at, "expected a positive integer"))?;
                if a == 0 {
                    return Err(err(at, "parts must be positive"));
                }
                parts.push(a);
            }
            pos += piece.len() + 1;
        }
        Ok(Composition(parts))
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// All compositions of `weight` into exactly `depth` parts, lexicographic.
pub fn compositions(weight: u32, depth: usize) -> Vec<Composition> {
    fn go(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if slots == 0 {
            if rest == 0 {
                out.push(Composition(cur.clone()));
            }
            return;
        }
        if rest < slots as u32 {
            return;
        }
        for a in 1..=rest - (slots as u32 - 1) {
            cur.push(a);
            go(rest - a, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if depth == 0 {
        if weight == 0 {
            out.push(Composition::empty());
        }
        return out;
    }
    go(weight, depth, &mut Vec::new(), &mut out);
    out
}

/// Admissible compositions with weight in `2..=max_weight` and depth in `1..=max_depth`.
pub fn admissible_compositions(max_weight: u32, max_depth: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    for w in 2..=max_weight {
        for d in 1..=max_depth {
            out.extend(compositions(w, d).into_iter().filter(|c| c.is_admissible()));
        }
    }
    out
}
