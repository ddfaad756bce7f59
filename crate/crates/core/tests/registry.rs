use std::collections::HashSet;

use eulersum::registry::{find_entry, identity_registry, run, run_defaults, run_suite, Mode, RunOptions};
use eulersum::Error;

#[test]
fn ids_and_names_are_unique() {
    let reg = identity_registry();
    let ids: HashSet<_> = reg.iter().map(|e| e.id).collect();
    let names: HashSet<_> = reg.iter().map(|e| e.name).collect();
    assert_eq!(ids.len(), reg.len());
    assert_eq!(names.len(), reg.len());
    assert_eq!(reg.len(), 31);
}

#[test]
fn defaults_lie_in_declared_ranges() {
    for e in identity_registry() {
        let defaults = e.default_params();
        assert!(!defaults.is_empty(), "{}", e.id);
        for p in defaults {
            assert_eq!(p.len(), e.params.len(), "{}", e.id);
            for (spec, v) in e.params.iter().zip(&p) {
                assert!((spec.min..=spec.max).contains(v), "{} {}={v}", e.id, spec.name);
            }
        }
    }
}

#[test]
fn whole_suite_passes_at_defaults() {
    for (id, res) in run_suite(&RunOptions::default(), 4) {
        let reports = res.unwrap_or_else(|e| panic!("{id}: {e}"));
        assert!(!reports.is_empty(), "{id}");
        for r in reports {
            assert!(r.pass, "{id} {:?} {}: {} vs {} ({})", r.params, r.label, r.lhs, r.rhs, r.diff);
        }
    }
}

#[test]
fn lookup_by_name() {
    assert_eq!(find_entry("hook_duality").unwrap().id, "r03");
    assert_eq!(find_entry("r29").unwrap().name, "W_table");
    assert!(find_entry("r00").is_none());
}

#[test]
fn parameters_are_validated() {
    let e = find_entry("r01").unwrap();
    let opts = RunOptions::default();
    assert!(matches!(run(e, &[4], &opts), Err(Error::Parameter(_))));
    assert!(matches!(run(e, &[4, 2, 1], &opts), Err(Error::Parameter(_))));
    assert!(matches!(run(e, &[99, 2], &opts), Err(Error::Parameter(_))));
}

#[test]
fn exact_reports_carry_no_tolerance() {
    let reports = run_defaults(find_entry("r03").unwrap(), &RunOptions::default()).unwrap();
    for r in reports {
        assert_eq!(r.mode, Mode::ExactSymbolic);
        assert_eq!(r.tolerance, None);
        assert_eq!(r.diff, "exact");
    }
}

#[test]
fn pinned_tolerance_beats_run_options() {
    let opts = RunOptions { tol: Some(1e-3), ..RunOptions::default() };
    let reports = run(find_entry("r01").unwrap(), &[4, 2], &opts).unwrap();
    assert_eq!(reports[0].tolerance, Some(1e-10));
    let loose = run(find_entry("r07").unwrap(), &[1, 2], &opts).unwrap();
    assert_eq!(loose[0].tolerance, Some(1e-3));
}

#[test]
fn timing_is_opt_in() {
    let e = find_entry("r01").unwrap();
    let plain = run(e, &[4, 2], &RunOptions::default()).unwrap();
    assert!(plain[0].elapsed_ms.is_none());
    let timed = run(e, &[4, 2], &RunOptions { timing: true, ..RunOptions::default() }).unwrap();
    assert!(timed[0].elapsed_ms.is_some());
}
