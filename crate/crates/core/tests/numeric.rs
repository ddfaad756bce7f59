use eulersum::arith::{riemann_zeta, HPReal, Rational};
use eulersum::combinatorics::{admissible_compositions, compositions, Composition};
use eulersum::numeric::{
    euler_sum, eval_algebra, hurwitz_mzv, hurwitz_mzv_star, hurwitz_zeta, linear_sum, mzv, mzv_star, sum_series,
    sum_series_at, ConstantsCache, Factor, NumericEnv, SeriesConfig, SeriesSpec,
};
use eulersum::symalg::{duality, AlgebraElement};
use eulersum::Error;

fn cfg() -> SeriesConfig {
    SeriesConfig::default()
}

fn comp(s: &str) -> Composition {
    s.parse().unwrap()
}

fn assert_close(a: &HPReal, b: &HPReal, tol: f64, what: &str) {
    let d = (a - b).abs().to_f64();
    assert!(d <= tol, "{what}: {} vs {} (diff {d:e})", a.to_fixed(20), b.to_fixed(20));
}

fn lit(s: &str) -> HPReal {
    HPReal::parse(s, 40).unwrap()
}

// pi^4/72 from pi to 40 digits.
const PI: &str = "3.141592653589793238462643383279502884197";

#[test]
fn simple_series() {
    let z2 = sum_series(&SeriesSpec::term(Rational::one(), 2, vec![]), 15, &cfg()).unwrap();
    assert_close(&z2, &riemann_zeta(2, 15).unwrap(), 1e-15, "zeta(2)");
    let s13 = sum_series(&SeriesSpec::term(Rational::one(), 3, vec![Factor::harmonic(1)]), 25, &cfg()).unwrap();
    let pi = lit(PI);
    let oracle = pi.powi(4) / HPReal::from_i64(72, 40);
    assert_close(&s13, &oracle, 1e-25, "S_{1,3}");
}

#[test]
fn divergent_inputs() {
    let spec = SeriesSpec::term(Rational::one(), 1, vec![Factor::harmonic(2)]);
    assert!(matches!(sum_series(&spec, 12, &cfg()), Err(Error::Divergent(_))));
    assert!(matches!(euler_sum(&[1], 1, 12, &cfg()), Err(Error::Divergent(_))));
    assert!(matches!(mzv(&comp("1,2"), 12, &cfg()), Err(Error::Divergent(_))));
    assert!(matches!(mzv(&comp("2,{1}_11"), 12, &cfg()), Err(Error::Unsupported(_))));
    assert!(matches!(mzv(&comp("11,2"), 12, &cfg()), Err(Error::Unsupported(_))));
    assert!(matches!(hurwitz_zeta(2, &Rational::from(-2), 12, &cfg()), Err(Error::Domain(_))));
    assert_eq!(spec.decay(), (0, 1));
    let s = SeriesSpec::term(Rational::one(), 2, vec![Factor::harmonic(1), Factor::stirling(3)]);
    assert_eq!(s.decay(), (3, 3));
}

#[test]
fn cutoff_limit_reports_precision() {
    let tight = SeriesConfig { levels: 1, n_max: 64 };
    let spec = SeriesSpec::term(Rational::one(), 2, vec![Factor::harmonic(1); 3]);
    match sum_series(&spec, 30, &tight) {
        Err(Error::Precision { requested: 30, achieved }) => assert!(achieved < 30),
        other => panic!("expected precision error, got {other:?}"),
    }
}

#[test]
fn linear_and_euler_sums() {
    let s12 = linear_sum(1, 2, 12, &cfg()).unwrap();
    let two_z3 = riemann_zeta(3, 14).unwrap() * HPReal::from_i64(2, 14);
    assert_close(&s12, &two_z3, 1e-12, "S_{1,2}");
    let s26 = linear_sum(2, 6, 30, &cfg()).unwrap();
    assert_close(&s26, &lit("1.021897096614780327741344768757377077428"), 1e-30, "S_{2,6}");
    assert_close(&s26, &mzv_star(&comp("6,2"), 30, &cfg()).unwrap(), 1e-29, "S_{2,6} = zeta*(6,2)");
    for (p, q) in [(1u32, 3u32), (2, 3), (3, 2), (2, 4)] {
        let a = linear_sum(p, q, 15, &cfg()).unwrap();
        let b = mzv_star(&Composition::from_slice(&[q, p]), 15, &cfg()).unwrap();
        assert_close(&a, &b, 1e-14, "S_{p,q} = zeta*(q,p)");
    }
    assert_close(&euler_sum(&[2], 6, 20, &cfg()).unwrap(), &linear_sum(2, 6, 20, &cfg()).unwrap(), 1e-20, "deg 1");
}

#[test]
fn table_values_direct() {
    // closed forms evaluated independently at 40 digits
    let rows: [(&[u32], u32, &str); 5] = [
        (&[1, 1, 1, 1], 4, "1.68625748775730579166360833883"),
        (&[1, 2, 3], 2, "3.3637430838168764008161808398985"),
        (&[1, 1, 2], 2, "6.365803725314136361857"),
        (&[1, 1, 1, 1, 1, 1], 2, "1302.28271941001924714647587733"),
        (&[1, 1, 1, 1, 1], 4, "2.3108353619040596163895365368543"),
    ];
    for (parts, q, v) in rows {
        let got = euler_sum(parts, q, 20, &cfg()).unwrap();
        assert_close(&got, &lit(v), 1e-20, &format!("S_{parts:?},{q}"));
    }
}

#[test]
fn mzv_values() {
    let z3 = riemann_zeta(3, 25).unwrap();
    assert_close(&mzv(&comp("2,1"), 25, &cfg()).unwrap(), &z3, 1e-25, "zeta(2,1)");
    assert_close(&mzv(&comp("4"), 25, &cfg()).unwrap(), &riemann_zeta(4, 25).unwrap(), 1e-25, "depth 1");
    for m in 0..=4usize {
        let v = mzv(&Composition::hook(2, m), 15, &cfg()).unwrap();
        assert_close(&v, &riemann_zeta(m as u32 + 2, 15).unwrap(), 1e-15, "zeta(2,{1}_m)");
        let w = mzv_star(&Composition::hook(2, m), 15, &cfg()).unwrap();
        let rhs = riemann_zeta(m as u32 + 2, 15).unwrap() * HPReal::from_i64(m as i64 + 1, 15);
        assert_close(&w, &rhs, 1e-14, "zeta*(2,{1}_m)");
    }
    let quarter = riemann_zeta(4, 20).unwrap() / HPReal::from_i64(4, 20);
    assert_close(&mzv(&comp("3,1"), 20, &cfg()).unwrap(), &quarter, 1e-20, "zeta(3,1)");
    let two = &z3 + &z3;
    assert_close(&mzv_star(&comp("2,1"), 20, &cfg()).unwrap(), &two, 1e-20, "zeta*(2,1)");
}

#[test]
fn sum_formula_and_duality() {
    for (w, d) in [(4u32, 2usize), (5, 2), (5, 3), (6, 4)] {
        let mut acc = HPReal::zero(12);
        for s in compositions(w, d).into_iter().filter(|c| c.is_admissible()) {
            acc = acc + mzv(&s, 12, &cfg()).unwrap();
        }
        assert_close(&acc, &riemann_zeta(w, 12).unwrap(), 1e-11, "sum formula");
    }
    for s in admissible_compositions(8, 4) {
        let a = mzv(&s, 12, &cfg()).unwrap();
        let b = mzv(&duality(&s).unwrap(), 12, &cfg());
        if let Ok(b) = b {
            assert_close(&a, &b, 1e-11, &format!("duality {s}"));
        }
    }
}

#[test]
fn doubling_stability() {
    let specs = [
        SeriesSpec::term(Rational::one(), 2, vec![Factor::harmonic(1); 4]),
        SeriesSpec::term(Rational::one(), 3, vec![Factor::stirling(3)]),
        SeriesSpec::term(Rational::one(), 2, vec![Factor::bell_y(3), Factor::stirling(2)]),
        SeriesSpec::term(Rational::one(), 3, vec![Factor::mhn_prev(comp("1,2,1"))]),
    ];
    let c = cfg();
    for spec in &specs {
        let n = c.initial_cutoff(20);
        let a = sum_series_at(spec, 20, n, &c).unwrap();
        let b = sum_series_at(spec, 20, 2 * n, &c).unwrap();
        assert_close(&a, &b, 1e-20, &spec.to_string());
    }
}

#[test]
fn hurwitz_values() {
    let z3 = riemann_zeta(3, 25).unwrap();
    assert_close(&hurwitz_zeta(3, &Rational::zero(), 25, &cfg()).unwrap(), &z3, 1e-25, "a = 0");
    let z2m1 = riemann_zeta(2, 25).unwrap() - HPReal::from_i64(1, 25);
    assert_close(&hurwitz_zeta(2, &Rational::one(), 25, &cfg()).unwrap(), &z2m1, 1e-25, "a = 1");
    // sum (n + 1/2)^-3 = 8 sum_{odd m >= 3} m^-3 = 7 zeta(3) - 8
    let half = hurwitz_zeta(3, &Rational::new(1, 2), 25, &cfg()).unwrap();
    let rhs = z3 * HPReal::from_i64(7, 25) - HPReal::from_i64(8, 25);
    assert_close(&half, &rhs, 1e-25, "a = 1/2");
    // indices >= 2 only: zeta(2,2) minus the pairs whose smaller index is 1
    let shifted = hurwitz_mzv(&comp("2,2"), &Rational::one(), 20, &cfg()).unwrap();
    let oracle = mzv(&comp("2,2"), 22, &cfg()).unwrap() - riemann_zeta(2, 22).unwrap() + HPReal::from_i64(1, 22);
    assert_close(&shifted, &oracle, 1e-20, "shifted zeta(2,2)");
    let one = hurwitz_mzv_star(&comp("3"), &Rational::new(1, 2), 20, &cfg()).unwrap();
    assert_close(&one, &hurwitz_zeta(3, &Rational::new(1, 2), 20, &cfg()).unwrap(), 1e-20, "depth 1");
}

#[test]
fn algebra_evaluation() {
    let env = NumericEnv::new(20);
    let c: AlgebraElement = "3/4".parse().unwrap();
    assert_eq!(eval_algebra(&c, &env).unwrap().to_fixed(2), "0.75");
    let e: AlgebraElement = "41/12*z(6)+2*z(3)^2".parse().unwrap();
    assert_close(&eval_algebra(&e, &env).unwrap(), &euler_sum(&[1, 1, 2], 2, 20, &cfg()).unwrap(), 1e-19, "S_{1^2 2,2}");
    let star: AlgebraElement = "-385/192*z(8)+5*z(3)*z(5)-z(2)*z(3)^2-3/4*S(2,6)".parse().unwrap();
    let direct = mzv_star(&comp("5,1,1,1"), 20, &cfg()).unwrap();
    assert_close(&eval_algebra(&star, &env).unwrap(), &direct, 1e-18, "zeta*(5,1,1,1)");
    let far: AlgebraElement = "m(2,{1}_11)".parse().unwrap();
    assert!(matches!(eval_algebra(&far, &env), Err(Error::UnresolvedAtom(_))));
}

#[test]
fn cache_roundtrip() {
    let env = NumericEnv::new(20);
    env.warm().unwrap();
    let cache = env.to_cache().unwrap();
    let dir = std::env::temp_dir().join(format!("eulersum-cache-{}", std::process::id()));
    let path = dir.join("constants.json");
    cache.write(&path).unwrap();
    let back = ConstantsCache::read(&path).unwrap();
    assert_eq!(back, cache);
    let fresh = NumericEnv::new(20);
    assert_eq!(fresh.load_cache(&back).unwrap(), 14);
    let e: AlgebraElement = "z(3)*S(2,6)".parse().unwrap();
    assert_eq!(eval_algebra(&e, &fresh).unwrap().to_fixed(20), eval_algebra(&e, &env).unwrap().to_fixed(20));
    let other = NumericEnv::with_config(20, SeriesConfig { levels: 6, n_max: 1000 });
    assert_eq!(other.load_cache(&back).unwrap(), 0);
    std::fs::remove_dir_all(dir).ok();
}

mod cutoff {
    use super::*;
    use proptest::prelude::*;

    fn admissible() -> impl Strategy<Value = Composition> {
        (2u32..5, proptest::collection::vec(1u32..4, 0..3)).prop_map(|(head, tail)| {
            let mut parts = vec![head];
            parts.extend(tail);
            Composition::from_slice(&parts)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn mzv_series_stable_under_doubling(s in admissible(), scale in 1usize..6) {
            let spec = SeriesSpec::term(Rational::one(), s.parts()[0], vec![Factor::mhn_prev(s.tail())]);
            let n = cfg().initial_cutoff(12) * scale;
            let a = sum_series_at(&spec, 14, n, &cfg()).unwrap();
            let b = sum_series_at(&spec, 14, 2 * n, &cfg()).unwrap();
            prop_assert!((&a - &b).abs().to_f64() < 1e-11, "zeta({}) at N={}", s, n);
        }

        #[test]
        fn stirling_series_stable_under_doubling(k in 1usize..4, m in 2u32..4, scale in 1usize..6) {
            let spec = SeriesSpec::term(Rational::one(), m, vec![Factor::harmonic(1), Factor::stirling(k)]);
            let n = cfg().initial_cutoff(12) * scale;
            let a = sum_series_at(&spec, 14, n, &cfg()).unwrap();
            let b = sum_series_at(&spec, 14, 2 * n, &cfg()).unwrap();
            prop_assert!((&a - &b).abs().to_f64() < 1e-9);
        }
    }
}
