use eulersum::arith::{factorial_q, Rational};
use eulersum::combinatorics::{
    bell_y, compositions, harmonic, mhn, mhn_star, seq_a, seq_abar, seq_b, seq_bbar, stirling1,
    Composition,
};
use eulersum::Error;
use num_bigint::BigInt;
use proptest::prelude::*;

fn comp(s: &str) -> Composition {
    s.parse().unwrap()
}

// Literal nested loops over n >= n1 > n2 > ... (or >=).
fn brute(n: u64, s: &[u32], star: bool) -> Rational {
    fn go(bound: u64, s: &[u32], star: bool) -> Rational {
        match s.split_first() {
            None => Rational::one(),
            Some((&p, rest)) => (1..=bound)
                .map(|j| {
                    let next = if star { j } else { j - 1 };
                    Rational::new(1, j as i64).pow(p as i32) * go(next, rest, star)
                })
                .sum(),
        }
    }
    go(n, s, star)
}

#[test]
fn harmonic_values() {
    assert_eq!(harmonic(0, 3).unwrap(), Rational::zero());
    assert_eq!(harmonic(3, 1).unwrap(), Rational::new(11, 6));
    assert_eq!(harmonic(4, 2).unwrap(), Rational::new(205, 144));
    assert!(matches!(harmonic(3, 0), Err(Error::Domain(_))));
}

#[test]
fn mhn_values() {
    assert_eq!(mhn(1, &comp("2,1")), Rational::zero());
    assert_eq!(mhn(3, &comp("2,1")), Rational::new(5, 12));
    assert_eq!(mhn(7, &Composition::empty()), Rational::one());
    assert_eq!(mhn_star(2, &comp("1,1")), Rational::new(7, 4));
    assert_eq!(mhn_star(7, &Composition::empty()), Rational::one());
    assert_eq!(mhn_star(1, &comp("3,1,4,1")), Rational::one());
}

#[test]
fn mhn_matches_brute_force() {
    for w in 1..=7 {
        for d in 1..=4 {
            for s in compositions(w, d) {
                for n in [0u64, 1, 2, 5, 9] {
                    assert_eq!(mhn(n, &s), brute(n, s.parts(), false), "mhn({n},{s})");
                    assert_eq!(mhn_star(n, &s), brute(n, s.parts(), true), "mhn_star({n},{s})");
                }
            }
        }
    }
}

#[test]
fn stirling_values() {
    assert_eq!(stirling1(0, 0), 1u32.into());
    assert_eq!(stirling1(3, 2), 3u32.into());
    assert_eq!(stirling1(4, 2), 11u32.into());
    assert_eq!(stirling1(5, 0), 0u32.into());
    assert_eq!(stirling1(2, 5), 0u32.into());
    // row sums of the unsigned triangle are n!
    for n in [10usize, 300] {
        let total: num_bigint::BigUint = (0..=n).map(|k| stirling1(n, k)).sum();
        assert_eq!(Rational::from_int(BigInt::from(total)), factorial_q(n as u64));
    }
}

#[test]
fn stirling_through_harmonic_sums() {
    for n in 1..=30u64 {
        for k in 1..=7usize {
            let lhs = Rational::from_int(BigInt::from(stirling1(n as usize, k)));
            let rhs = factorial_q(n - 1) * mhn(n - 1, &Composition::ones(k - 1));
            assert_eq!(lhs, rhs, "s({n},{k})");
        }
    }
}

#[test]
fn bell_values() {
    for n in 0..6 {
        assert_eq!(bell_y(1, n), harmonic(n, 1).unwrap());
    }
    // (3/2)^2 + 5/4
    assert_eq!(bell_y(2, 2), Rational::new(7, 2));
    for n in 0..=30u64 {
        for m in 0..=6usize {
            assert_eq!(mhn_star(n, &Composition::ones(m)), bell_y(m, n) / factorial_q(m as u64));
        }
    }
}

#[test]
fn star_two_insertions_are_harmonic_polynomials() {
    for n in 0..=20u64 {
        for m in 1..=5usize {
            let lhs: Rational = (1..=m)
                .map(|i| {
                    let mut s = Composition::ones(i - 1);
                    s.push(2);
                    s.extend_repeat(1, m - i);
                    mhn_star(n, &s)
                })
                .sum();
            let rhs: Rational = (1..=m)
                .map(|i| harmonic(n, (m + 2 - i) as u32).unwrap() * mhn_star(n, &Composition::ones(i - 1)))
                .sum();
            assert_eq!(lhs, rhs, "n={n} m={m}");
        }
    }
}

#[test]
fn sequence_examples() {
    let xs = [Rational::one(), Rational::one()];
    assert_eq!(seq_a(0, 2, &xs).unwrap(), Rational::one());
    assert_eq!(seq_b(2, 2, &xs).unwrap(), Rational::from(3));
    assert_eq!(seq_a(2, 2, &xs).unwrap(), Rational::from(6));
    assert_eq!(seq_bbar(2, 2, &xs).unwrap(), Rational::one());
    assert!(matches!(seq_b(2, 3, &xs), Err(Error::Arity { needed: 3, got: 2 })));
}

#[test]
fn composition_text_format() {
    assert_eq!(comp("4,{1}_5").parts(), &[4, 1, 1, 1, 1, 1]);
    assert_eq!(comp("4,{1}_5").to_string(), "4,{1}_5");
    assert_eq!(comp("6,1,1").to_string(), "6,1,1");
    assert_eq!(comp("(2, 1)").to_string(), "2,1");
    assert_eq!(comp("{2}_3,3,{2}_0").to_string(), "{2}_3,3");
    assert!(matches!("2,x".parse::<Composition>(), Err(Error::Parse { pos: 2, .. })));
    assert!("2,0".parse::<Composition>().is_err());
    assert!(comp("2,1").is_admissible());
    assert!(!comp("1,2").is_admissible());
}

fn rationals(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-30i64..30, 1i64..12).prop_map(|(a, b)| Rational::new(a, b)), len)
}

proptest! {
    #[test]
    fn composition_roundtrip(parts in proptest::collection::vec(1u32..5, 0..9)) {
        let c = Composition::new(parts).unwrap();
        let text = c.to_string();
        let back: Composition = text.parse().unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn a_is_m_factorial_b(m in 0usize..=6, n in 0usize..=6, xs in rationals(6)) {
        let f = factorial_q(m as u64);
        prop_assert_eq!(seq_a(m, n, &xs).unwrap(), &f * seq_b(m, n, &xs).unwrap());
        prop_assert_eq!(seq_abar(m, n, &xs).unwrap(), &f * seq_bbar(m, n, &xs).unwrap());
    }

    #[test]
    fn finite_stuffle(n in 0u64..25, a in 1u32..5, b in 1u32..5) {
        let lhs = harmonic(n, a).unwrap() * harmonic(n, b).unwrap();
        let rhs = mhn(n, &Composition::from_slice(&[a, b]))
            + mhn(n, &Composition::from_slice(&[b, a]))
            + harmonic(n, a + b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
