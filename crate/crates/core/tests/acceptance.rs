use std::time::{Duration, Instant};

use eulersum::closedforms::{data::TABLE_ROWS, star_hook};
use eulersum::combinatorics::admissible_compositions;
use eulersum::numeric::{sum_series_at, Factor, SeriesConfig, SeriesSpec};
use eulersum::registry::{find_entry, run, run_defaults, Mode, RunOptions, Side};
use eulersum::symalg::AlgebraElement;
use eulersum::Rational;

struct Tally {
    checks: usize,
    passed: usize,
    worst: f64,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { checks: 0, passed: 0, worst: 0.0, failures: Vec::new() }
    }

    fn ok(&self) -> bool {
        self.checks > 0 && self.passed == self.checks
    }

    /// Runs `id` at `params`, or at its defaults when `params` is empty; every
    /// numeric check must use a tolerance no looser than `max_tol`.
    fn entry(&mut self, id: &str, params: &[&[i64]], max_tol: f64) {
        let entry = find_entry(id).expect("registered");
        let opts = RunOptions::default();
        let results = if params.is_empty() {
            vec![run_defaults(entry, &opts)]
        } else {
            params.iter().map(|p| run(entry, p, &opts)).collect()
        };
        for res in results {
            match res {
                Ok(reports) => {
                    for r in reports {
                        self.checks += 1;
                        let tight = r.tolerance.map_or(r.mode != Mode::Numeric, |t| t <= max_tol);
                        if let Ok(d) = r.diff.parse::<f64>() {
                            self.worst = self.worst.max(d);
                        }
                        if r.pass && tight {
                            self.passed += 1;
                        } else {
                            self.failures.push(format!("{} {:?} {}: {}", r.id, r.params, r.label, r.diff));
                        }
                    }
                }
                Err(e) => {
                    self.checks += 1;
                    self.failures.push(format!("{id}: {e}"));
                }
            }
        }
    }
}

struct Line {
    pass: bool,
    text: String,
}

fn line(n: u32, title: &str, tally: &Tally, elapsed: Duration, budget: Option<Duration>) -> Line {
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let pass = tally.ok() && in_time;
    let mut text = format!(
        "criterion {n:>2} {} {title}: {}/{} checks, worst diff {:.1e}, {:.2} s",
        if pass { "PASS" } else { "FAIL" },
        tally.passed,
        tally.checks,
        tally.worst,
        elapsed.as_secs_f64()
    );
    if let Some(b) = budget {
        text += &format!(" (budget {} s)", b.as_secs());
    }
    for f in tally.failures.iter().take(5) {
        text += &format!("\n    {f}");
    }
    Line { pass, text }
}

fn timed(f: impl FnOnce(&mut Tally)) -> (Tally, Duration) {
    let mut t = Tally::new();
    let start = Instant::now();
    f(&mut t);
    (t, start.elapsed())
}

fn exact(t: &mut Tally, what: &str, got: AlgebraElement, want: &str) {
    t.checks += 1;
    let want: AlgebraElement = want.parse().unwrap();
    if got == want {
        t.passed += 1;
    } else {
        t.failures.push(format!("{what}: got {got}, want {want}"));
    }
}

fn series_sides(side: &Side, out: &mut Vec<SeriesSpec>) {
    match side {
        Side::Series(s) => out.push(s.clone()),
        Side::Sum(parts) => parts.iter().for_each(|(_, s)| series_sides(s, out)),
        _ => {}
    }
}

fn stable(t: &mut Tally, what: &str, spec: &SeriesSpec, tol: f64) {
    let cfg = SeriesConfig::default();
    let n = cfg.initial_cutoff(12);
    t.checks += 1;
    let res = sum_series_at(spec, 14, n, &cfg).and_then(|a| sum_series_at(spec, 14, 2 * n, &cfg).map(|b| (&a - &b).abs().to_f64()));
    match res {
        Ok(d) => {
            t.worst = t.worst.max(d);
            if d <= tol {
                t.passed += 1;
            } else {
                t.failures.push(format!("{what}: N={n} vs 2N differ by {d:.2e}"));
            }
        }
        Err(e) => t.failures.push(format!("{what}: {e}")),
    }
}

#[test]
fn acceptance() {
    let mut lines = Vec::new();

    let (t, e) = timed(|t| t.entry("r29", &[], 0.0));
    lines.push(line(1, "W table exact", &t, e, Some(Duration::from_secs(1))));

    let (t, e) = timed(|t| t.entry("r30", &[], 1e-10));
    lines.push(line(2, "weight 8 and 9 Euler sum table", &t, e, Some(Duration::from_secs(600))));

    let (t, e) = timed(|t| {
        for id in ["r04", "r05", "r06", "r24", "r25"] {
            t.entry(id, &[], 0.0);
        }
    });
    lines.push(line(3, "exact rational identities", &t, e, Some(Duration::from_secs(30))));

    let (t, e) = timed(|t| {
        t.entry("r03", &[], 0.0);
        t.entry("r02", &[], 1e-10);
    });
    lines.push(line(4, "hook duality and general duality", &t, e, None));

    let (t, e) = timed(|t| t.entry("r01", &[&[4, 2], &[5, 2], &[5, 3]], 1e-10));
    lines.push(line(5, "sum formula", &t, e, None));

    let (t, e) = timed(|t| {
        t.entry("r08", &[&[1, 0], &[1, 1], &[2, 0], &[2, 1], &[3, 1]], 1e-8);
        t.entry("r09", &[&[1, 2, 2], &[2, 2, 3], &[1, 3, 3]], 1e-8);
        t.entry("r11", &[&[1, 1, 1], &[2, 1, 2]], 1e-8);
        t.entry("r12", &[], 1e-8);
        t.entry("r13", &[], 1e-8);
    });
    lines.push(line(6, "Stirling and Bell series", &t, e, None));

    let (t, e) = timed(|t| {
        t.entry("r26", &[&[2, 1], &[2, 2], &[2, 3], &[2, 4]], 1e-10);
        t.entry("r28", &[&[1, 2], &[2, 2], &[2, 3], &[3, 2]], 1e-8);
        t.entry("r27", &[], 1e-8);
    });
    lines.push(line(7, "power and Hurwitz closed forms", &t, e, None));

    let (t, e) = timed(|t| {
        t.entry("r22", &[&[1, 2], &[2, 2], &[2, 3]], 1e-8);
        t.entry("r23", &[&[1, 2], &[2, 3]], 1e-8);
    });
    lines.push(line(8, "star hook differences", &t, e, None));

    let (t, e) = timed(|t| {
        for m in 1..=5u32 {
            exact(t, &format!("star_hook(1,{m})"), star_hook(1, m).unwrap(), &format!("{}*z({})", m + 1, m + 2));
        }
        exact(t, "zeta*(5,1,1,1)", star_hook(4, 3).unwrap(), "-385/192*z(8)+5*z(3)*z(5)-z(2)*z(3)^2-3/4*S(2,6)");
        exact(t, "zeta*(4,1,1,1,1)", star_hook(3, 4).unwrap(), "107/16*z(8)-6*z(3)*z(5)+1/2*z(2)*z(3)^2+3/4*S(2,6)");
    });
    lines.push(line(9, "star hooks exact", &t, e, None));

    let (t, e) = timed(|t| {
        let opts_entries: &[(&str, &[&[i64]], f64)] = &[
            ("r08", &[&[1, 0], &[1, 1], &[2, 0], &[2, 1], &[3, 1]], 1e-8),
            ("r09", &[&[1, 2, 2], &[2, 2, 3], &[1, 3, 3]], 1e-8),
            ("r11", &[&[1, 1, 1], &[2, 1, 2]], 1e-8),
            ("r12", &[&[1, 1, 1], &[1, 2, 2], &[2, 2, 1], &[2, 3, 1]], 1e-8),
            ("r13", &[&[1, 1], &[1, 2], &[2, 2], &[2, 3]], 1e-8),
            ("r23", &[&[1, 2], &[2, 3]], 1e-8),
        ];
        for (id, params, tol) in opts_entries {
            let entry = find_entry(id).unwrap();
            for p in *params {
                for check in entry.checks(p).unwrap() {
                    let mut specs = Vec::new();
                    series_sides(&check.lhs, &mut specs);
                    series_sides(&check.rhs, &mut specs);
                    for s in specs {
                        stable(t, &format!("{id} {p:?}"), &s, check.tol.unwrap_or(*tol));
                    }
                }
            }
        }
        for row in TABLE_ROWS {
            let spec = SeriesSpec::term(Rational::one(), row.q, row.parts.iter().map(|&p| Factor::harmonic(p)).collect());
            stable(t, row.label, &spec, 1e-10);
        }
        for s in admissible_compositions(10, 4).into_iter().filter(|s| s.depth() > 1) {
            let spec = SeriesSpec::term(Rational::one(), s.parts()[0], vec![Factor::mhn_prev(s.tail())]);
            stable(t, &format!("zeta({s})"), &spec, 1e-10);
        }
        for a in [Rational::zero(), Rational::one(), Rational::new(1, 2)] {
            for exp in 2..=6 {
                let spec = SeriesSpec::term(Rational::one(), 0, vec![Factor::power(a.clone(), exp)]);
                stable(t, &format!("hurwitz({exp}, {a})"), &spec, 1e-8);
            }
        }
    });
    lines.push(line(10, "stability under cutoff doubling", &t, e, None));

    for l in &lines {
        println!("{}", l.text);
    }
    let failed: Vec<_> = lines.iter().filter(|l| !l.pass).map(|l| l.text.lines().next().unwrap()).collect();
    assert!(failed.is_empty(), "failing criteria:\n{}", failed.join("\n"));
}
