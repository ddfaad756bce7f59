use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{param, Check, IdentityEntry, Mode, ParamSpec, Side};
use crate::arith::{binomial, factorial_q, HPReal, Rational};
use crate::closedforms::data::{EULER_ROWS, STAR_HOOK_3_4, STAR_HOOK_3_5, STAR_HOOK_4_3, TABLE_ROWS, W_VALUES};
use crate::closedforms::{
    euler_closed_form, h_star_sum, h_sum, hook_value, hurwitz_power, li_log_moment, li_moment, power_zeta,
    power_zeta_star, reduce, star_hook, two_insertion_sum, w,
};
use crate::combinatorics::{
    bell_y, compositions, harmonic, mhn, mhn_star, seq_a, seq_abar, seq_b, seq_bbar, stirling1, Composition,
};
use crate::error::{Error, Result};
use crate::numeric::{euler_sum, hurwitz_mzv, hurwitz_mzv_star, mzv_star, Factor, SeriesSpec};
use crate::symalg::{duality, mzv_element, star_element, AlgebraElement};

fn z(k: u32) -> AlgebraElement {
    AlgebraElement::zeta(k)
}

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn fact(n: u32) -> Rational {
    factorial_q(n as u64)
}

/// Run-length composition: `[(3, 1), (1, 2)]` is `(3, 1, 1)`.
fn rl(runs: &[(u32, u32)]) -> Composition {
    let mut s = Composition::empty();
    for &(v, k) in runs {
        s.extend_repeat(v, k as usize);
    }
    s
}

fn mz(s: &Composition) -> Result<AlgebraElement> {
    mzv_element(s)
}

fn star(s: &Composition) -> Result<AlgebraElement> {
    star_element(s)
}

fn star_value(s: Composition) -> Side {
    Side::computed(format!("zeta*({s})"), move |d, cfg| mzv_star(&s, d, cfg))
}

fn u(v: i64) -> u32 {
    v as u32
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

fn grid(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &(lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

fn list(items: &[&[i64]]) -> Vec<Vec<i64>> {
    items.iter().map(|p| p.to_vec()).collect()
}

fn sum_formula(p: &[i64]) -> Result<Vec<Check>> {
    let (n, k) = (u(p[0]), p[1] as usize);
    if k as u32 >= n {
        return Err(bad("sum formula needs k < n"));
    }
    let lhs = compositions(n, k).iter().filter(|s| s.is_admissible()).map(mz).sum::<Result<AlgebraElement>>()?;
    let label = format!("sum of zeta(s), s admissible of weight {n} and depth {k}, equals z({n})");
    Ok(vec![Check::numeric(label, Side::Algebra(lhs), Side::Algebra(z(n))).tol(1e-10)])
}

fn general_duality(p: &[i64]) -> Result<Vec<Check>> {
    let (wt, d) = (u(p[0]), p[1] as usize);
    if d as u32 >= wt {
        return Err(bad("duality needs depth < weight"));
    }
    let mut out = Vec::new();
    for s in compositions(wt, d).into_iter().filter(|s| s.is_admissible()) {
        let dual = duality(&s)?;
        let label = format!("zeta({s}) = zeta({dual})");
        out.push(Check::numeric(label, Side::Algebra(mz(&s)?), Side::Algebra(mz(&dual)?)).tol(1e-10));
    }
    Ok(out)
}

fn hook_duality(p: &[i64]) -> Result<Vec<Check>> {
    let (m, k) = (u(p[0]), u(p[1]));
    let a = Composition::hook(k + 1, m as usize - 1);
    let b = Composition::hook(m + 1, k as usize - 1);
    Ok(vec![Check::exact(
        format!("zeta({a}) = zeta({b})"),
        Mode::ExactSymbolic,
        Side::Algebra(hook_value(k + 1, m - 1)),
        Side::Algebra(hook_value(m + 1, k - 1)),
    )])
}

fn stirling_mhs(p: &[i64]) -> Result<Vec<Check>> {
    let (n, k) = (p[0] as usize, p[1] as usize);
    let lhs = Rational::from_int(stirling1(n, k));
    let rhs = factorial_q(n as u64 - 1) * mhn(n as u64 - 1, &Composition::ones(k - 1));
    Ok(vec![Check::exact(
        format!("s({n},{k}) = ({n}-1)! zeta_{}({{1}}_{})", n - 1, k - 1),
        Mode::ExactRational,
        Side::Rational(lhs),
        Side::Rational(rhs),
    )])
}

fn bell_star(p: &[i64]) -> Result<Vec<Check>> {
    let (n, m) = (p[0] as u64, p[1] as usize);
    let lhs = mhn_star(n, &Composition::ones(m));
    let rhs = bell_y(m, n) / fact(m as u32);
    Ok(vec![Check::exact(
        format!("zeta*_{n}({{1}}_{m}) = Y_{m}({n})/{m}!"),
        Mode::ExactRational,
        Side::Rational(lhs),
        Side::Rational(rhs),
    )])
}

fn star_two_shift(p: &[i64]) -> Result<Vec<Check>> {
    let (n, m) = (p[0] as u64, u(p[1]));
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    for i in 1..=m {
        lhs += mhn_star(n, &rl(&[(1, i - 1), (2, 1), (1, m - i)]));
        rhs += harmonic(n, m + 2 - i)? * mhn_star(n, &Composition::ones(i as usize - 1));
    }
    Ok(vec![Check::exact(
        format!("one 2 among {m} parts of zeta*_{n}"),
        Mode::ExactRational,
        Side::Rational(lhs),
        Side::Rational(rhs),
    )])
}

fn stirling_series(p: &[i64]) -> Result<Vec<Check>> {
    let (k, m) = (p[0] as usize, u(p[1]));
    let lhs = SeriesSpec::term(Rational::one(), m, vec![Factor::stirling(k)]);
    let s = Composition::hook(k as u32 + 1, m as usize - 1);
    Ok(vec![Check::numeric(format!("sum s(n,{k})/(n! n^{m}) = zeta({s})"), Side::Series(lhs), Side::Algebra(hook_value(k as u32 + 1, m - 1)))])
}

fn harmonic_stirling(p: &[i64]) -> Result<Vec<Check>> {
    let (pp, m) = (u(p[0]), u(p[1]));
    let lhs = SeriesSpec::term(Rational::one(), m + 1, vec![Factor::harmonic(1), Factor::stirling(pp as usize)]);
    let rhs = hook_value(pp + 2, m).scale(&q(pp as i64 + 1)) + two_insertion_sum(pp + 1, m + 1);
    Ok(vec![Check::numeric(format!("sum H_n s(n,{pp})/(n! n^{})", m + 1), Side::Series(lhs), Side::Algebra(rhs))])
}

fn stirling_harmonic_power(p: &[i64]) -> Result<Vec<Check>> {
    let (m, r, pp) = (u(p[0]), u(p[1]), u(p[2]));
    let lhs = SeriesSpec::term(Rational::one(), pp, vec![Factor::stirling(m as usize), Factor::harmonic(r)]);
    let tail = rl(&[(m + 1, 1), (1, pp - 1), (2, 1), (1, r - 2)]);
    let rhs = &z(r) * &hook_value(m + 1, pp - 1) - mz(&tail)?;
    Ok(vec![Check::numeric(format!("sum s(n,{m}) zeta_n({r})/(n! n^{pp})"), Side::Series(lhs), Side::Algebra(rhs))])
}

fn stirling_duality(p: &[i64]) -> Result<Vec<Check>> {
    let (m, r) = (p[0] as usize, p[1] as usize);
    let lhs = SeriesSpec::term(Rational::one(), 1, vec![Factor::stirling(m), Factor::harmonic(r as u32 + 1)]);
    let rhs = SeriesSpec::term(Rational::one(), 1, vec![Factor::stirling(r), Factor::harmonic(m as u32 + 1)]);
    Ok(vec![Check::numeric(format!("sum s(n,{m}) zeta_n({})/(n! n) symmetric in ({m},{r})", r + 1), Side::Series(lhs), Side::Series(rhs))])
}

/// Tuples `(i_1, ..., i_m)` of nonnegative integers with sum at most `k`.
fn bounded_tuples(m: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t: Vec<u32>| {
                let used: u32 = t.iter().sum();
                (0..=k - used).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn bell_stirling(p: &[i64]) -> Result<Vec<Check>> {
    let (k, m, pp) = (u(p[0]), u(p[1]), u(p[2]));
    let lhs = SeriesSpec::term(Rational::one(), m + 1, vec![Factor::bell_y(k as usize), Factor::stirling(pp as usize)]);
    let mut rhs = AlgebraElement::zero();
    for t in bounded_tuples(m as usize, k) {
        let used: u32 = t.iter().sum();
        let mut s = Composition::from_slice(&[pp + k + 1 - used]);
        for &i in t.iter().rev() {
            s.push(i + 1);
        }
        let c = fact(k) * binomial((pp + k - used) as i64, pp as i64);
        rhs = rhs + mz(&s)?.scale(&c);
    }
    Ok(vec![Check::numeric(format!("sum Y_{k}(n) s(n,{pp})/(n! n^{})", m + 1), Side::Series(lhs), Side::Algebra(rhs))])
}

fn bell_exchange(p: &[i64]) -> Result<Vec<Check>> {
    let (k, m, pp) = (u(p[0]), u(p[1]), u(p[2]));
    let lhs = SeriesSpec::term(fact(pp), m + 1, vec![Factor::bell_y(k as usize), Factor::stirling(pp as usize)]).with(
        Rational::sign(m as i64 - 1) * fact(k),
        m + 1,
        vec![Factor::bell_y(pp as usize), Factor::stirling(k as usize)],
    );
    let mut rhs = AlgebraElement::zero();
    for i in 1..=m {
        let t = &hook_value(i + 1, k - 1) * &hook_value(m + 2 - i, pp - 1);
        rhs = rhs + t.scale(&Rational::sign(i as i64 - 1));
    }
    let rhs = rhs.scale(&(fact(pp) * fact(k)));
    Ok(vec![Check::numeric(format!("Y_{k}/Y_{pp} exchange at n^-{}", m + 1), Side::Series(lhs), Side::Algebra(rhs))])
}

fn bell_exchange_square(p: &[i64]) -> Result<Vec<Check>> {
    let (k, pp) = (u(p[0]), u(p[1]));
    let lhs = SeriesSpec::term(fact(pp), 2, vec![Factor::stirling(pp as usize), Factor::bell_y(k as usize)])
        .with(fact(k), 2, vec![Factor::stirling(k as usize), Factor::bell_y(pp as usize)]);
    let rhs = (&z(k + 1) * &z(pp + 1)).scale(&(fact(k) * fact(pp)));
    Ok(vec![Check::numeric(format!("Y_{k}/Y_{pp} exchange at n^-2"), Side::Series(lhs), Side::Algebra(rhs))])
}

fn li_moment_check(p: &[i64]) -> Result<Vec<Check>> {
    let (n, pp) = (p[0] as u64, u(p[1]));
    let rhs = SeriesSpec::term(Rational::one(), pp, vec![Factor::power(q(n as i64), 1)]);
    Ok(vec![Check::numeric(format!("int x^{} Li_{pp}(x)", n - 1), Side::Algebra(li_moment(n, pp)?), Side::Series(rhs))])
}

fn li_logmoment_check(p: &[i64]) -> Result<Vec<Check>> {
    let (n, m, pp) = (p[0] as u64, u(p[1]), u(p[2]));
    let c = Rational::sign(m as i64) * fact(m);
    let rhs = SeriesSpec::term(c, pp, vec![Factor::power(q(n as i64), m + 1)]);
    Ok(vec![Check::numeric(
        format!("int x^{} ln^{m}(x) Li_{pp}(x)", n - 1),
        Side::Algebra(li_log_moment(n, m, pp)?),
        Side::Series(rhs),
    )])
}

/// Right side of the star-hook relation with the MZVs left formal.
fn star_hook_literal(p: u32, m: u32) -> Result<AlgebraElement> {
    let mut e = AlgebraElement::zero();
    for i in 1..p {
        e = e + (&z(p + 1 - i) * &hook_value(m + 1, i - 1)).scale(&Rational::sign(i as i64 - 1));
    }
    let sign = Rational::sign(p as i64 + 1);
    for i in 1..p {
        e = e + mz(&rl(&[(m + 1, 1), (1, i - 1), (2, 1), (1, p - 1 - i)]))?.scale(&sign);
    }
    Ok(e + hook_value(m + 2, p - 1).scale(&(sign * q(m as i64 + 1))))
}

fn star_hook_expansion(p: &[i64]) -> Result<Vec<Check>> {
    let (pp, m) = (u(p[0]), u(p[1]));
    let s = Composition::hook(pp + 1, m as usize);
    let literal = star_hook_literal(pp, m)?;
    let reduced = star_hook(pp, m)?;
    let mut out = vec![
        Check::numeric(format!("zeta*({s}), formal MZVs"), star_value(s.clone()), Side::Algebra(literal.clone())),
        Check::numeric(format!("zeta*({s}), reduced"), star_value(s.clone()), Side::Algebra(reduced.clone())),
    ];
    let direct = reduce(&literal);
    if crate::closedforms::unresolved(&direct) == 0 {
        out.push(Check::exact(format!("zeta*({s}) reduces exactly"), Mode::ExactSymbolic, Side::Algebra(direct), Side::Algebra(reduced)));
    }
    Ok(out)
}

fn star_hook_series(p: &[i64]) -> Result<Vec<Check>> {
    let (pp, m) = (u(p[0]), u(p[1]));
    let s = Composition::hook(pp + 1, m as usize);
    let mut alg = AlgebraElement::zero();
    for i in 0..pp.saturating_sub(1) {
        alg = alg + (&z(pp - i) * &hook_value(m + 1, i)).scale(&Rational::sign(i as i64));
    }
    let series = SeriesSpec::term(Rational::one(), pp, vec![Factor::harmonic(1), Factor::stirling(m as usize)]);
    let rhs = Side::Sum(vec![(Rational::one(), Side::Algebra(alg)), (Rational::sign(pp as i64 - 1), Side::Series(series))]);
    Ok(vec![Check::numeric(format!("zeta*({s}) through sum H_n s(n,{m})/(n! n^{pp})"), star_value(s), rhs)])
}

fn star_single_two(p: &[i64]) -> Result<Vec<Check>> {
    let (pp, m) = (u(p[0]), u(p[1]));
    let mut lhs = star(&Composition::hook(pp + 2, m as usize))?;
    for i in 1..=m {
        lhs = lhs + star(&rl(&[(pp + 1, 1), (1, i - 1), (2, 1), (1, m - i)]))?;
    }
    for i in 0..m {
        lhs = lhs - &z(m - i + 1) * &star(&Composition::hook(pp + 1, i as usize))?;
    }
    let mut rhs = AlgebraElement::zero();
    for i in 1..pp {
        for j in 1..=pp - i {
            let t = &z(pp + 2 - i - j) * &hook_value(m + 1, i + j - 1);
            rhs = rhs + t.scale(&Rational::sign((i + j) as i64));
        }
    }
    let sign = Rational::sign(pp as i64 + 1);
    rhs = rhs + hook_value(m + 2, pp).scale(&(&sign * &q((pp * (m + 1)) as i64)));
    for i in 0..pp {
        rhs = rhs + mz(&rl(&[(m + 1, 1), (1, i), (2, 1), (1, pp - 1 - i)]))?.scale(&(&sign * &q(pp as i64)));
    }
    rhs = rhs - mz(&rl(&[(m + 1, 1), (1, pp - 1), (2, 1)]))?.scale(&sign);
    Ok(vec![Check::numeric(format!("star sums with one 2, head {}, {m} trailing parts", pp + 1), Side::Algebra(lhs), Side::Algebra(rhs))])
}

fn star_head_two(p: &[i64]) -> Result<Vec<Check>> {
    let m = u(p[0]);
    let mut lhs = star(&Composition::hook(3, m as usize))?;
    for i in 1..=m {
        lhs = lhs + star(&rl(&[(2, 1), (1, i - 1), (2, 1), (1, m - i)]))?;
    }
    let mut rhs = mz(&Composition::from_slice(&[m + 2, 1]))?.scale(&q(m as i64 + 1));
    for i in 0..m {
        rhs = rhs + &z(m - i + 1) * &star(&Composition::hook(2, i as usize))?;
    }
    Ok(vec![Check::numeric(format!("star sums with head 2, m = {m}"), Side::Algebra(lhs), Side::Algebra(rhs))])
}

fn star_hooks(p: &[i64]) -> Result<Vec<Check>> {
    let (pp, m) = (u(p[0]), u(p[1]));
    let s = Composition::hook(pp + 1, m as usize);
    let got = star_hook(pp, m)?;
    let label = format!("zeta*({s})");
    let reference = match (pp, m) {
        (1, _) => Some(z(m + 2).scale(&q(m as i64 + 1))),
        (3, 4) => Some(STAR_HOOK_3_4.parse()?),
        (3, 5) => Some(STAR_HOOK_3_5.parse()?),
        (4, 3) => Some(STAR_HOOK_4_3.parse()?),
        _ => None,
    };
    if let Some(r) = reference {
        return Ok(vec![Check::exact(label, Mode::ExactSymbolic, Side::Algebra(got), Side::Algebra(r))]);
    }
    if pp == 2 {
        let literal = &z(2) * &z(m + 1)
            - mz(&Composition::from_slice(&[m + 2, 1]))?.scale(&q(m as i64 + 1))
            - mz(&Composition::from_slice(&[m + 1, 2]))?;
        let literal = reduce(&literal);
        let mut a = literal.atoms();
        let mut b = got.atoms();
        a.sort_by_key(|x| x.to_string());
        b.sort_by_key(|x| x.to_string());
        if a == b {
            return Ok(vec![Check::exact(label, Mode::ExactSymbolic, Side::Algebra(got), Side::Algebra(literal))]);
        }
        // the two forms keep different formal MZVs
        return Ok(vec![Check::numeric(label, Side::Algebra(got), Side::Algebra(literal))]);
    }
    Ok(vec![Check::numeric(label, Side::Algebra(got), star_value(s))])
}

fn euler_closed_forms(p: &[i64]) -> Result<Vec<Check>> {
    let row = EULER_ROWS.get(p[0] as usize - 1).ok_or_else(|| bad("no such row"))?;
    let closed: AlgebraElement = row.closed_form.parse()?;
    let sums: Vec<(i64, Vec<u32>, u32)> = row.sums.iter().map(|(c, parts, q)| (*c, parts.to_vec(), *q)).collect();
    let text = sums
        .iter()
        .map(|(c, parts, q)| {
            let parts: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
            format!("{c}*S({};{q})", parts.join(","))
        })
        .collect::<Vec<_>>()
        .join(" + ");
    let direct = Side::computed(text, move |d, cfg| {
        let mut acc = HPReal::zero(d);
        for (c, parts, q) in &sums {
            acc = acc + euler_sum(parts, *q, d, cfg)? * HPReal::from_i64(*c, d);
        }
        Ok(acc)
    });
    Ok(vec![Check::numeric(row.label, Side::Algebra(closed), direct).tol(1e-10)])
}

fn kaneko_ohno(p: &[i64]) -> Result<Vec<Check>> {
    let (n, k) = (u(p[0]), u(p[1]));
    let lhs = Side::Sum(vec![
        (Rational::sign(k as i64), star_value(Composition::hook(k + 1, n as usize))),
        (-Rational::sign(n as i64), star_value(Composition::hook(n + 1, k as usize))),
    ]);
    let mut rhs = hook_value(k + 2, n - 1).scale(&q(k as i64)) - hook_value(n + 2, k - 1).scale(&q(n as i64));
    for j in 0..k.saturating_sub(1) {
        rhs = rhs + (&z(k - j) * &hook_value(n + 1, j)).scale(&Rational::sign((k + j) as i64));
    }
    for j in 0..n.saturating_sub(1) {
        rhs = rhs - (&z(n - j) * &hook_value(k + 1, j)).scale(&Rational::sign((n + j) as i64));
    }
    Ok(vec![Check::numeric(format!("star hook difference at (n, k) = ({n}, {k})"), lhs, Side::Algebra(rhs))])
}

fn hook_exchange(p: &[i64]) -> Result<Vec<Check>> {
    let (pp, m) = (u(p[0]), u(p[1]));
    let series = SeriesSpec::term(Rational::one(), m, vec![Factor::harmonic(1), Factor::stirling(pp as usize)])
        .with(-Rational::one(), pp, vec![Factor::harmonic(1), Factor::stirling(m as usize)]);
    let hooks = hook_value(pp + 2, m - 1) - hook_value(m + 2, pp - 1);
    let weighted = hook_value(pp + 2, m - 1).scale(&q(pp as i64)) - hook_value(m + 2, pp - 1).scale(&q(m as i64));
    let inserted = two_insertion_sum(m + 1, pp) - two_insertion_sum(pp + 1, m);
    Ok(vec![
        Check::numeric(format!("harmonic Stirling series difference ({pp}, {m})"), Side::Series(series), Side::Algebra(weighted)),
        Check::numeric(format!("two-insertion sums difference ({pp}, {m})"), Side::Algebra(inserted), Side::Algebra(hooks)),
    ])
}

const FUZZ_VECTORS: usize = 100;

fn fuzz_vectors(m: usize, n: usize, salt: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(salt ^ ((m as u64) << 16) ^ n as u64);
    (0..FUZZ_VECTORS)
        .map(|_| (0..n).map(|_| Rational::new(rng.gen_range(-20..=20), rng.gen_range(1..=12))).collect())
        .collect()
}

type SeqFn = fn(usize, usize, &[Rational]) -> Result<Rational>;

fn seq_check(p: &[i64], salt: u64, a: SeqFn, b: SeqFn, label: &str) -> Result<Vec<Check>> {
    let (m, n) = (p[0] as usize, p[1] as usize);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for xs in fuzz_vectors(m, n, salt) {
        lhs.push(a(m, n, &xs)?);
        rhs.push(fact(m as u32) * b(m, n, &xs)?);
    }
    Ok(vec![Check::exact(
        format!("{label} over {FUZZ_VECTORS} random vectors"),
        Mode::ExactRational,
        Side::Rationals(lhs),
        Side::Rationals(rhs),
    )])
}

fn bell_ab(p: &[i64]) -> Result<Vec<Check>> {
    seq_check(p, 0xa5a5, seq_a, seq_b, "A_m(n) = m! B_m(n)")
}

fn bell_abar(p: &[i64]) -> Result<Vec<Check>> {
    seq_check(p, 0x5a5a, seq_abar, seq_bbar, "Abar_m(n) = m! Bbar_m(n)")
}

fn power_checks(p: &[i64]) -> Result<Vec<Check>> {
    let (pp, m) = (u(p[0]), u(p[1]));
    if pp * m > 12 {
        return Err(bad("weight p*m above 12"));
    }
    let s = Composition::repeat(pp, m as usize);
    Ok(vec![
        Check::numeric(format!("zeta({s})"), Side::Algebra(power_zeta(pp, m)?), Side::Algebra(mz(&s)?)).tol(1e-10),
        Check::numeric(format!("zeta*({s})"), Side::Algebra(power_zeta_star(pp, m)?), star_value(s)).tol(1e-10),
    ])
}

fn hurwitz_checks(p: &[i64]) -> Result<Vec<Check>> {
    let (m, pp) = (u(p[0]), u(p[1]));
    if p[3] == 0 {
        return Err(bad("a_den must be positive"));
    }
    let a = Rational::new(p[2], p[3]);
    let s = Composition::repeat(pp, m as usize);
    let mut out = Vec::new();
    for starred in [false, true] {
        let name = if starred { "zeta*" } else { "zeta" };
        let (a1, a2, s2) = (a.clone(), a.clone(), s.clone());
        let lhs = Side::computed(format!("{name}({{{pp}}}_{m}; a) by recurrence"), move |d, cfg| hurwitz_power(pp, m, &a1, starred, d, cfg));
        let rhs = Side::computed(format!("{name}({s}; a) by summation"), move |d, cfg| {
            if starred {
                hurwitz_mzv_star(&s2, &a2, d, cfg)
            } else {
                hurwitz_mzv(&s2, &a2, d, cfg)
            }
        });
        out.push(Check::numeric(format!("{name}({s}; a = {a})"), lhs, rhs));
    }
    Ok(out)
}

fn h_checks(p: &[i64]) -> Result<Vec<Check>> {
    let (m, pp) = (u(p[0]), u(p[1]));
    if pp * m + 1 > 12 {
        return Err(bad("weight p*m+1 above 12"));
    }
    let mut direct = AlgebraElement::zero();
    let mut direct_star = AlgebraElement::zero();
    for a in 0..m {
        let s = rl(&[(pp, a), (pp + 1, 1), (pp, m - 1 - a)]);
        direct = direct + mz(&s)?;
        direct_star = direct_star + star(&s)?;
    }
    Ok(vec![
        Check::numeric(format!("H(m = {m}, p = {pp})"), Side::Algebra(h_sum(m, pp)?), Side::Algebra(direct)),
        Check::numeric(format!("H*(m = {m}, p = {pp})"), Side::Algebra(h_star_sum(m, pp)?), Side::Algebra(direct_star)),
    ])
}

fn w_table(_: &[i64]) -> Result<Vec<Check>> {
    W_VALUES
        .iter()
        .map(|(m, k, text)| {
            Ok(Check::exact(format!("W({m},{k})"), Mode::ExactSymbolic, Side::Algebra(w(*m, *k)?), Side::Algebra(text.parse()?)))
        })
        .collect()
}

fn euler_table(p: &[i64]) -> Result<Vec<Check>> {
    let row = TABLE_ROWS.get(p[0] as usize - 1).ok_or_else(|| bad("no such row"))?;
    let closed = euler_closed_form(row.parts, row.q)
        .ok_or_else(|| Error::Unsupported(format!("no stored closed form for {}", row.label)))?;
    let printed = |text: &'static str, what: &str| {
        Side::computed(format!("{what} {text}"), move |d, _| HPReal::parse(text, d))
    };
    let parts = row.parts.to_vec();
    let q = row.q;
    let direct = Side::computed(format!("{} by direct summation", row.label), move |d, cfg| euler_sum(&parts, q, d, cfg));
    Ok(vec![
        Check::numeric(format!("{}: closed form vs printed closed-form value", row.label), Side::Algebra(closed.clone()), printed(row.closed_form_value, "printed"))
            .digits(30)
            .tol(1e-25)
            .relative(),
        Check::numeric(format!("{}: closed form vs printed direct value", row.label), Side::Algebra(closed.clone()), printed(row.direct_value, "printed"))
            .digits(30)
            .tol(1e-25)
            .relative(),
        Check::numeric(format!("{}: direct summation vs closed form", row.label), direct, Side::Algebra(closed))
            .digits(12)
            .tol(1e-10),
    ])
}

fn stuffle(p: &[i64]) -> Result<Vec<Check>> {
    let (a, b) = (u(p[0]), u(p[1]));
    let rhs = mz(&Composition::from_slice(&[a, b]))? + mz(&Composition::from_slice(&[b, a]))? + z(a + b);
    Ok(vec![Check::numeric(format!("z({a}) z({b}) stuffle"), Side::Algebra(&z(a) * &z(b)), Side::Algebra(rhs))])
}

const NM: &[ParamSpec] = &[param("n", 1, 60), param("m", 0, 10)];

pub fn identity_registry() -> &'static [IdentityEntry] {
    static REGISTRY: OnceLock<Vec<IdentityEntry>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        vec![
            IdentityEntry {
                id: "r01",
                name: "sum_formula",
                summary: "sum of all admissible zeta(s) of fixed weight and depth equals zeta(weight)",
                mode: Mode::Numeric,
                params: const { &[param("n", 2, 12), param("k", 1, 11)] },
                defaults: || list(&[&[4, 2], &[5, 2], &[5, 3]]),
                build: sum_formula,
            },
            IdentityEntry {
                id: "r02",
                name: "general_duality",
                summary: "zeta(s) = zeta(dual s) for every admissible s of the given weight and depth",
                mode: Mode::Numeric,
                params: const { &[param("weight", 2, 12), param("depth", 1, 11)] },
                defaults: || (2..=10).flat_map(|w| (1..=(w - 1).min(4)).map(move |d| vec![w, d])).collect(),
                build: general_duality,
            },
            IdentityEntry {
                id: "r03",
                name: "hook_duality",
                summary: "zeta(k+1,{1}_(m-1)) = zeta(m+1,{1}_(k-1)) as zeta polynomials",
                mode: Mode::ExactSymbolic,
                params: const { &[param("m", 1, 8), param("k", 1, 8)] },
                defaults: || grid(&[(1, 5), (1, 5)]),
                build: hook_duality,
            },
            IdentityEntry {
                id: "r04",
                name: "stirling_mhs",
                summary: "s(n,k) = (n-1)! zeta_(n-1)({1}_(k-1))",
                mode: Mode::ExactRational,
                params: const { &[param("n", 1, 60), param("k", 1, 20)] },
                defaults: || grid(&[(1, 12), (1, 6)]),
                build: stirling_mhs,
            },
            IdentityEntry {
                id: "r05",
                name: "bell_star",
                summary: "zeta*_n({1}_m) = Y_m(n)/m!",
                mode: Mode::ExactRational,
                params: NM,
                defaults: || grid(&[(1, 30), (0, 6)]),
                build: bell_star,
            },
            IdentityEntry {
                id: "r06",
                name: "star_two_shift",
                summary: "star harmonic sums with a single 2 as polynomials in harmonic numbers",
                mode: Mode::ExactRational,
                params: const { &[param("n", 1, 60), param("m", 1, 10)] },
                defaults: || grid(&[(1, 20), (1, 5)]),
                build: star_two_shift,
            },
            IdentityEntry {
                id: "r07",
                name: "stirling_series",
                summary: "sum s(n,k)/(n! n^m) = zeta(k+1,{1}_(m-1))",
                mode: Mode::Numeric,
                params: const { &[param("k", 1, 6), param("m", 1, 6)] },
                defaults: || list(&[&[1, 1], &[2, 1], &[1, 2], &[2, 2], &[3, 2]]),
                build: stirling_series,
            },
            IdentityEntry {
                id: "r08",
                name: "harmonic_stirling",
                summary: "sum H_n s(n,p)/(n! n^(m+1)) in hook MZVs and MZVs with a single 2",
                mode: Mode::Numeric,
                params: const { &[param("p", 1, 6), param("m", 0, 6)] },
                defaults: || list(&[&[1, 0], &[1, 1], &[2, 0], &[2, 1], &[3, 1]]),
                build: harmonic_stirling,
            },
            IdentityEntry {
                id: "r09",
                name: "stirling_harmonic_power",
                summary: "sum s(n,m) zeta_n(r)/(n! n^p) = zeta(r) zeta(m+1,{1}_(p-1)) - zeta(m+1,{1}_(p-1),2,{1}_(r-2))",
                mode: Mode::Numeric,
                params: const { &[param("m", 1, 6), param("r", 2, 6), param("p", 1, 6)] },
                defaults: || list(&[&[1, 2, 2], &[2, 2, 3], &[1, 3, 3]]),
                build: stirling_harmonic_power,
            },
            IdentityEntry {
                id: "r10",
                name: "stirling_duality",
                summary: "sum s(n,m) zeta_n(r+1)/(n! n) is symmetric in m and r",
                mode: Mode::Numeric,
                params: const { &[param("m", 1, 5), param("r", 1, 5)] },
                defaults: || list(&[&[1, 2], &[2, 3], &[1, 3]]),
                build: stirling_duality,
            },
            IdentityEntry {
                id: "r11",
                name: "bell_stirling",
                summary: "sum Y_k(n) s(n,p)/(n! n^(m+1)) as a binomially weighted MZV sum",
                mode: Mode::Numeric,
                params: const { &[param("k", 0, 4), param("m", 0, 4), param("p", 1, 4)] },
                defaults: || list(&[&[1, 1, 1], &[2, 1, 2], &[1, 0, 2], &[2, 2, 1]]),
                build: bell_stirling,
            },
            IdentityEntry {
                id: "r12",
                name: "bell_exchange",
                summary: "exchange of Y_k and Y_p in Stirling series as products of hook MZVs",
                mode: Mode::Numeric,
                params: const { &[param("k", 1, 4), param("m", 1, 4), param("p", 1, 4)] },
                defaults: || list(&[&[1, 1, 1], &[1, 2, 2], &[2, 2, 1], &[2, 3, 1]]),
                build: bell_exchange,
            },
            IdentityEntry {
                id: "r13",
                name: "bell_exchange_square",
                summary: "p! sum s(n,p)Y_k(n)/(n! n^2) + k! sum s(n,k)Y_p(n)/(n! n^2) = k!p! zeta(k+1) zeta(p+1)",
                mode: Mode::Numeric,
                params: const { &[param("k", 1, 4), param("p", 1, 4)] },
                defaults: || list(&[&[1, 1], &[1, 2], &[2, 2], &[2, 3]]),
                build: bell_exchange_square,
            },
            IdentityEntry {
                id: "r14",
                name: "li_moment_check",
                summary: "int_0^1 x^(n-1) Li_p(x) dx against sum 1/(k^p (k+n))",
                mode: Mode::Numeric,
                params: const { &[param("n", 1, 20), param("p", 1, 8)] },
                defaults: || list(&[&[1, 1], &[2, 2], &[3, 3], &[2, 4]]),
                build: li_moment_check,
            },
            IdentityEntry {
                id: "r15",
                name: "li_logmoment_check",
                summary: "int_0^1 x^(n-1) ln^m(x) Li_p(x) dx against (-1)^m m! sum 1/(k^p (k+n)^(m+1))",
                mode: Mode::Numeric,
                params: const { &[param("n", 1, 20), param("m", 0, 6), param("p", 1, 8)] },
                defaults: || list(&[&[1, 1, 1], &[2, 1, 2], &[3, 1, 3], &[2, 2, 2]]),
                build: li_logmoment_check,
            },
            IdentityEntry {
                id: "r16",
                name: "star_hook_expansion",
                summary: "zeta*(p+1,{1}_m) in hook MZVs and MZVs with a single 2",
                mode: Mode::Numeric,
                params: const { &[param("p", 1, 6), param("m", 1, 6)] },
                defaults: || list(&[&[1, 1], &[2, 1], &[2, 2], &[3, 1], &[2, 3], &[3, 2]]),
                build: star_hook_expansion,
            },
            IdentityEntry {
                id: "r17",
                name: "star_hook_series",
                summary: "zeta*(p+1,{1}_m) through the series sum H_n s(n,m)/(n! n^p)",
                mode: Mode::Numeric,
                params: const { &[param("p", 1, 6), param("m", 1, 6)] },
                defaults: || list(&[&[1, 1], &[2, 1], &[2, 2], &[3, 2]]),
                build: star_hook_series,
            },
            IdentityEntry {
                id: "r18",
                name: "star_single_two",
                summary: "star MZVs with a single 2 against hook MZVs",
                mode: Mode::Numeric,
                params: const { &[param("p", 1, 5), param("m", 1, 5)] },
                defaults: || list(&[&[1, 1], &[1, 2], &[2, 1], &[2, 2], &[3, 1]]),
                build: star_single_two,
            },
            IdentityEntry {
                id: "r19",
                name: "star_head_two",
                summary: "the head-2 case of the star relation with a single 2",
                mode: Mode::Numeric,
                params: const { &[param("m", 1, 6)] },
                defaults: || list(&[&[1], &[2], &[3]]),
                build: star_head_two,
            },
            IdentityEntry {
                id: "r20",
                name: "star_hooks",
                summary: "zeta*(p+1,{1}_m) from the star-hook builder against known forms",
                mode: Mode::ExactSymbolic,
                params: const { &[param("p", 1, 6), param("m", 1, 6)] },
                defaults: || {
                    let mut v = grid(&[(1, 1), (1, 5)]);
                    v.extend(grid(&[(2, 2), (1, 4)]));
                    v.extend(list(&[&[3, 4], &[4, 3], &[3, 5]]));
                    v
                },
                build: star_hooks,
            },
            IdentityEntry {
                id: "r21",
                name: "euler_closed_forms",
                summary: "stored closed forms of nonlinear Euler sums against direct summation",
                mode: Mode::Numeric,
                params: const { &[param("row", 1, EULER_ROWS.len() as i64)] },
                defaults: || (1..=EULER_ROWS.len() as i64).map(|r| vec![r]).collect(),
                build: euler_closed_forms,
            },
            IdentityEntry {
                id: "r22",
                name: "kaneko_ohno",
                summary: "signed difference of two star hooks as a zeta polynomial",
                mode: Mode::Numeric,
                params: const { &[param("n", 1, 6), param("k", 1, 6)] },
                defaults: || list(&[&[1, 2], &[2, 2], &[2, 3]]),
                build: kaneko_ohno,
            },
            IdentityEntry {
                id: "r23",
                name: "hook_exchange",
                summary: "harmonic Stirling series and two-insertion MZV sums under p <-> m",
                mode: Mode::Numeric,
                params: const { &[param("p", 1, 6), param("m", 1, 6)] },
                defaults: || list(&[&[1, 2], &[2, 3]]),
                build: hook_exchange,
            },
            IdentityEntry {
                id: "r24",
                name: "bell_AB",
                summary: "A_m(n) = m! B_m(n) on random rational vectors",
                mode: Mode::ExactRational,
                params: const { &[param("m", 0, 8), param("n", 1, 8)] },
                defaults: || grid(&[(1, 6), (1, 6)]),
                build: bell_ab,
            },
            IdentityEntry {
                id: "r25",
                name: "bell_AbarBbar",
                summary: "Abar_m(n) = m! Bbar_m(n) on random rational vectors",
                mode: Mode::ExactRational,
                params: const { &[param("m", 0, 8), param("n", 1, 8)] },
                defaults: || grid(&[(1, 6), (1, 6)]),
                build: bell_abar,
            },
            IdentityEntry {
                id: "r26",
                name: "power_checks",
                summary: "zeta({p}_m) and zeta*({p}_m) from their recurrences against summation",
                mode: Mode::Numeric,
                params: const { &[param("p", 2, 12), param("m", 1, 6)] },
                defaults: || list(&[&[2, 1], &[2, 2], &[2, 3], &[2, 4], &[3, 2], &[3, 3]]),
                build: power_checks,
            },
            IdentityEntry {
                id: "r27",
                name: "hurwitz_power",
                summary: "shifted zeta({p}_m; a+1) recurrences against shifted summation",
                mode: Mode::Numeric,
                params: const { &[param("m", 1, 4), param("p", 2, 4), param("a_num", 0, 10), param("a_den", 1, 10)] },
                defaults: || {
                    let mut v = Vec::new();
                    for a in [[0, 1], [1, 1], [1, 2]] {
                        for m in 1..=3 {
                            v.push(vec![m, 2, a[0], a[1]]);
                        }
                    }
                    v
                },
                build: hurwitz_checks,
            },
            IdentityEntry {
                id: "r28",
                name: "H_checks",
                summary: "H(m,p) and H*(m,p) recurrences against direct MZV sums",
                mode: Mode::Numeric,
                params: const { &[param("m", 1, 5), param("p", 2, 6)] },
                defaults: || list(&[&[1, 2], &[2, 2], &[2, 3], &[3, 2]]),
                build: h_checks,
            },
            IdentityEntry {
                id: "r29",
                name: "W_table",
                summary: "fifteen published W(m,k) values",
                mode: Mode::ExactSymbolic,
                params: const { &[] },
                defaults: || vec![vec![]],
                build: w_table,
            },
            IdentityEntry {
                id: "r30",
                name: "euler_table",
                summary: "30-digit values of weight 8 and 9 Euler sums, both printed columns",
                mode: Mode::Numeric,
                params: const { &[param("row", 1, TABLE_ROWS.len() as i64)] },
                defaults: || (1..=TABLE_ROWS.len() as i64).map(|r| vec![r]).collect(),
                build: euler_table,
            },
            IdentityEntry {
                id: "r31",
                name: "stuffle_sanity",
                summary: "z(a) z(b) = zeta(a,b) + zeta(b,a) + z(a+b)",
                mode: Mode::Numeric,
                params: const { &[param("a", 2, 8), param("b", 2, 8)] },
                defaults: || list(&[&[2, 2], &[2, 3], &[3, 4]]),
                build: stuffle,
            },
        ]
    })
}
