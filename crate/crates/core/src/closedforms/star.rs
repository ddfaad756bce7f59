use std::sync::OnceLock;

use super::hook::hook_value;
use crate::arith::Rational;
use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::symalg::{merge_even_zetas, AlgebraElement, Atom};

/// Known evaluations of MZVs of weight 6 to 9 in zeta values and `S(2,6)`.
pub const MZV_REDUCTIONS: &[(&str, &str)] = &[
    ("5,1", "3/4*z(6)-1/2*z(3)^2"),
    ("6,1", "3*z(7)-z(2)*z(5)-z(3)*z(4)"),
    ("6,1,1", "61/24*z(8)-3*z(3)*z(5)+1/2*z(2)*z(3)^2"),
    ("5,1,1,1", "499/192*z(8)-4*z(3)*z(5)+z(2)*z(3)^2"),
    ("5,1,2", "-73/72*z(8)+9/2*z(3)*z(5)-3/2*z(2)*z(3)^2-S(2,6)"),
    ("5,2,1", "-541/144*z(8)+7/2*z(3)*z(5)-z(2)*z(3)^2+7/4*S(2,6)"),
    ("7,1,1", "28/3*z(9)-3*z(2)*z(7)-7/4*z(3)*z(6)-9/4*z(4)*z(5)+1/6*z(3)^3"),
    ("6,1,2", "-313/36*z(9)+7*z(2)*z(7)-5/3*z(3)*z(6)-1/4*z(4)*z(5)-1/3*z(3)^3"),
    ("6,2,1", "-2189/72*z(9)+11*z(2)*z(7)+9/2*z(3)*z(6)+13/2*z(4)*z(5)-1/3*z(3)^3"),
];

fn reduction_table() -> &'static [(Composition, AlgebraElement)] {
    static TABLE: OnceLock<Vec<(Composition, AlgebraElement)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        MZV_REDUCTIONS
            .iter()
            .map(|(s, e)| (s.parse().expect("table composition"), e.parse().expect("table element")))
            .collect()
    })
}

/// The stored evaluation of `zeta(s)`, if any.
pub fn known_reduction(s: &Composition) -> Option<AlgebraElement> {
    reduction_table().iter().find(|(c, _)| c == s).map(|(_, e)| e.clone())
}

fn is_hook(s: &Composition) -> bool {
    s.parts()[1..].iter().all(|&p| p == 1)
}

/// Replaces every MZV atom that is a hook or has a stored evaluation, then
/// folds products of even zeta values.
pub fn reduce(e: &AlgebraElement) -> AlgebraElement {
    let out = e.substitute(|a| match a {
        Atom::Mzv(s) if is_hook(s) => Some(hook_value(s.parts()[0], s.depth() as u32 - 1)),
        Atom::Mzv(s) => known_reduction(s),
        _ => None,
    });
    merge_even_zetas(&out)
}

/// Number of MZV atoms left formal.
pub fn unresolved(e: &AlgebraElement) -> usize {
    e.atoms().iter().filter(|a| matches!(a, Atom::Mzv(_))).count()
}

/// `zeta(head, {1}_(i-1), 2, {1}_(len-1-i))`
fn two_in_ones(head: u32, i: u32, len: u32) -> AlgebraElement {
    let mut c = Composition::from_slice(&[head]);
    c.extend_repeat(1, i as usize - 1);
    c.push(2);
    c.extend_repeat(1, (len - 1 - i) as usize);
    AlgebraElement::atom(Atom::mzv(c).expect("head >= 2"))
}

/// `sum_{i=1}^{len-1} zeta(head, {1}_(i-1), 2, {1}_(len-1-i))`
pub fn two_insertion_sum(head: u32, len: u32) -> AlgebraElement {
    (1..len).map(|i| two_in_ones(head, i, len)).sum()
}

/// `sum_{i=1}^{p-1} zeta(m+1, {1}_(i-1), 2, {1}_(p-1-i))` in whichever of its
/// two equivalent forms leaves fewer formal MZVs after [`reduce`].
fn reduced_insertion_sum(p: u32, m: u32) -> AlgebraElement {
    let direct = reduce(&two_insertion_sum(m + 1, p));
    if unresolved(&direct) == 0 {
        return direct;
    }
    let swapped = two_insertion_sum(p + 1, m) + hook_value(p + 2, m - 1) - hook_value(m + 2, p - 1);
    let swapped = reduce(&swapped);
    if unresolved(&swapped) < unresolved(&direct) {
        swapped
    } else {
        direct
    }
}

/// `zeta*(p+1, {1}_m)` in hook values and MZVs with one part equal to 2,
/// reduced where the stored evaluations allow.
pub fn star_hook(p: u32, m: u32) -> Result<AlgebraElement> {
    if p == 0 || m == 0 {
        return Err(Error::Parameter("star_hook(p, m) needs p, m >= 1".into()));
    }
    let mut e = AlgebraElement::zero();
    for i in 1..p {
        let t = &AlgebraElement::zeta(p + 1 - i) * &hook_value(m + 1, i - 1);
        e = e + t.scale(&Rational::sign(i as i64 - 1));
    }
    let tail = reduced_insertion_sum(p, m) + hook_value(m + 2, p - 1).scale(&Rational::from(m as i64 + 1));
    e = e + tail.scale(&Rational::sign(p as i64 + 1));
    Ok(reduce(&e))
}
