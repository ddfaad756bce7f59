use super::atom::Atom;
use super::element::{AlgebraElement, Monomial};
use crate::arith::{bernoulli, factorial_q, Rational};
use crate::combinatorics::Composition;
use crate::error::{domain, Result};

/// The `2^(d-1)` compositions obtained by merging adjacent parts, so that
/// `zeta*(s)` is the sum of `zeta` over them. Bit `i` of the enumeration
/// index merges across comma `i`.
pub fn star_to_mzv(s: &Composition) -> Vec<Composition> {
    let parts = s.parts();
    if parts.is_empty() {
        return vec![Composition::empty()];
    }
    let gaps = parts.len() - 1;
    (0u64..1 << gaps)
        .map(|mask| {
            let mut out = vec![parts[0]];
            for (i, &p) in parts[1..].iter().enumerate() {
                if mask >> i & 1 == 1 {
                    *out.last_mut().unwrap() += p;
                } else {
                    out.push(p);
                }
            }
            Composition::from_slice(&out)
        })
        .collect()
}

/// `zeta*(s)` written as a sum of MZV atoms.
pub fn star_element(s: &Composition) -> Result<AlgebraElement> {
    if !s.is_admissible() {
        return Err(domain(format!("zeta*({s}) is not admissible")));
    }
    star_to_mzv(s).into_iter().map(|c| Atom::mzv(c).map(AlgebraElement::atom)).sum()
}

/// `zeta(s)` as an algebra element.
pub fn mzv_element(s: &Composition) -> Result<AlgebraElement> {
    Atom::mzv(s.clone()).map(AlgebraElement::atom)
}

/// Blocks `(m_i + 2, {1}_{n_i})` of an admissible composition, as `(m_i, n_i)`.
pub fn blocks(s: &Composition) -> Result<Vec<(u32, u32)>> {
    if !s.is_admissible() {
        return Err(domain(format!("({s}) is not admissible")));
    }
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &p in s.parts() {
        if p >= 2 {
            out.push((p - 2, 0));
        } else {
            out.last_mut().unwrap().1 += 1;
        }
    }
    Ok(out)
}

/// Dual composition: blocks reversed with the roles of `m_i` and `n_i` swapped.
pub fn duality(s: &Composition) -> Result<Composition> {
    let mut out = Composition::empty();
    for (m, n) in blocks(s)?.into_iter().rev() {
        out.push(n + 2);
        out.extend_repeat(1, m as usize);
    }
    Ok(out)
}

/// `zeta(2k) / pi^(2k) = (-1)^(k+1) B_2k 2^(2k-1) / (2k)!`
fn even_zeta_ratio(k: u32) -> Rational {
    let b = bernoulli(2 * k as usize);
    Rational::sign(k as i64 + 1) * b * Rational::from(2).pow(2 * k as i32 - 1) / factorial_q(2 * k as u64)
}

/// Folds every product of even zeta values in a monomial into a single
/// `zeta(2K)`, using `zeta(2k) = r_k pi^(2k)` with rational `r_k`.
pub fn merge_even_zetas(e: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (m, c) in e.terms() {
        let mut half = 0u32;
        let mut coeff = c.clone();
        let mut rest = Vec::new();
        for (a, k) in m.factors() {
            match a {
                Atom::Zeta(t) if t % 2 == 0 => {
                    half += t / 2 * k;
                    coeff *= even_zeta_ratio(t / 2).pow(*k as i32);
                }
                _ => rest.push((a.clone(), *k)),
            }
        }
        if half > 0 {
            coeff /= even_zeta_ratio(half);
            rest.push((Atom::Zeta(2 * half), 1));
        }
        out.add_term(Monomial::from_factors(rest), coeff);
    }
    out
}
