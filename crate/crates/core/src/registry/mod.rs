//! Named identities with builders for both sides and a comparison mode.

mod entries;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::arith::{HPReal, Rational};
use crate::error::{Error, Result};
use crate::numeric::{sum_series, ConstantsCache, NumericEnv, SeriesConfig, SeriesSpec};
use crate::symalg::AlgebraElement;

pub use entries::identity_registry;

pub const DEFAULT_DIGITS: u32 = 12;
pub const DEFAULT_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    ExactRational,
    ExactSymbolic,
    Numeric,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::ExactRational => "EXACT_RATIONAL",
            Mode::ExactSymbolic => "EXACT_SYMBOLIC",
            Mode::Numeric => "NUMERIC",
        })
    }
}

/// A value evaluated on demand at a digit budget.
pub type Thunk = Arc<dyn Fn(u32, &SeriesConfig) -> Result<HPReal> + Send + Sync>;

/// One side of a check.
#[derive(Clone)]
pub enum Side {
    Rational(Rational),
    Rationals(Vec<Rational>),
    Algebra(AlgebraElement),
    Series(SeriesSpec),
    Computed { text: String, eval: Thunk },
    /// Linear combination of other sides.
    Sum(Vec<(Rational, Side)>),
}

impl Side {
    pub fn computed(text: impl Into<String>, f: impl Fn(u32, &SeriesConfig) -> Result<HPReal> + Send + Sync + 'static) -> Side {
        Side::Computed { text: text.into(), eval: Arc::new(f) }
    }

    fn value(&self, digits: u32, env: &NumericEnv) -> Result<HPReal> {
        match self {
            Side::Rational(r) => Ok(HPReal::from_rational(r, digits)),
            Side::Rationals(_) => Err(Error::Unsupported("a list of rationals has no single value".into())),
            Side::Algebra(e) => env.eval(e).map(|v| v.with_digits(digits)),
            Side::Series(s) => sum_series(s, digits, env.config()),
            Side::Computed { eval, .. } => eval(digits, env.config()),
            Side::Sum(parts) => {
                let mut acc = HPReal::zero(digits);
                for (c, side) in parts {
                    acc = acc + side.value(digits, env)? * HPReal::from_rational(c, digits);
                }
                Ok(acc)
            }
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Rational(r) => write!(f, "{r}"),
            Side::Rationals(v) => match v.first() {
                Some(first) => write!(f, "[{} values; first {first}]", v.len()),
                None => f.write_str("[]"),
            },
            Side::Algebra(e) => write!(f, "{e}"),
            Side::Series(s) => write!(f, "{s}"),
            Side::Computed { text, .. } => f.write_str(text),
            Side::Sum(parts) => {
                for (i, (c, side)) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    if c.is_one() {
                        write!(f, "({side})")?;
                    } else {
                        write!(f, "{c}*({side})")?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// A single comparison `lhs == rhs`.
#[derive(Clone)]
pub struct Check {
    pub label: String,
    pub mode: Mode,
    pub lhs: Side,
    pub rhs: Side,
    /// Pinned digit budget; overrides the run options.
    pub digits: Option<u32>,
    /// Pinned tolerance; overrides the run options.
    pub tol: Option<f64>,
    /// Compare `|lhs - rhs| / |rhs|` instead of the absolute difference.
    pub relative: bool,
}

impl Check {
    pub fn exact(label: impl Into<String>, mode: Mode, lhs: Side, rhs: Side) -> Check {
        Check { label: label.into(), mode, lhs, rhs, digits: None, tol: None, relative: false }
    }

    pub fn numeric(label: impl Into<String>, lhs: Side, rhs: Side) -> Check {
        Check::exact(label, Mode::Numeric, lhs, rhs)
    }

    pub fn tol(mut self, tol: f64) -> Check {
        self.tol = Some(tol);
        self
    }

    pub fn digits(mut self, digits: u32) -> Check {
        self.digits = Some(digits);
        self
    }

    pub fn relative(mut self) -> Check {
        self.relative = true;
        self
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    pub max: i64,
}

pub const fn param(name: &'static str, min: i64, max: i64) -> ParamSpec {
    ParamSpec { name, min, max }
}

pub type Builder = fn(&[i64]) -> Result<Vec<Check>>;

pub struct IdentityEntry {
    pub id: &'static str,
    pub name: &'static str,
    pub summary: &'static str,
    pub mode: Mode,
    pub params: &'static [ParamSpec],
    defaults: fn() -> Vec<Vec<i64>>,
    build: Builder,
}

impl IdentityEntry {
    pub fn default_params(&self) -> Vec<Vec<i64>> {
        (self.defaults)()
    }

    /// Validates `params` against the declared ranges and builds the checks.
    pub fn checks(&self, params: &[i64]) -> Result<Vec<Check>> {
        if params.len() != self.params.len() {
            return Err(Error::Parameter(format!(
                "{} takes {} parameters ({}), got {}",
                self.id,
                self.params.len(),
                self.param_names().join(", "),
                params.len()
            )));
        }
        for (spec, v) in self.params.iter().zip(params) {
            if *v < spec.min || *v > spec.max {
                return Err(Error::Parameter(format!(
                    "{}: {} = {v} outside {}..={}",
                    self.id, spec.name, spec.min, spec.max
                )));
            }
        }
        (self.build)(params)
    }

    pub fn param_names(&self) -> Vec<&'static str> {
        self.params.iter().map(|p| p.name).collect()
    }
}

pub fn find_entry(id: &str) -> Option<&'static IdentityEntry> {
    identity_registry().iter().find(|e| e.id == id || e.name == id)
}

/// Run-wide settings; checks with pinned digits or tolerance keep them.
#[derive(Clone, Default)]
pub struct RunOptions {
    pub digits: Option<u32>,
    pub tol: Option<f64>,
    pub config: SeriesConfig,
    pub timing: bool,
    pub cache: Option<Arc<ConstantsCache>>,
}

/// Outcome of one check.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct EvalReport {
    pub id: String,
    pub label: String,
    pub params: BTreeMap<String, i64>,
    pub mode: Mode,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_expr: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_expr: Option<String>,
    pub diff: String,
    pub digits: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub relative: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

struct Envs<'a> {
    opts: &'a RunOptions,
    by_digits: HashMap<u32, NumericEnv>,
}

impl Envs<'_> {
    fn get(&mut self, digits: u32) -> Result<&NumericEnv> {
        if !self.by_digits.contains_key(&digits) {
            let env = NumericEnv::with_config(digits, self.opts.config);
            if let Some(cache) = &self.opts.cache {
                env.load_cache(cache)?;
            }
            self.by_digits.insert(digits, env);
        }
        Ok(&self.by_digits[&digits])
    }
}

fn exact_report(check: &Check, equal: bool) -> (String, String, Option<String>, Option<String>, String, bool) {
    let diff = if equal { "exact".to_string() } else { "mismatch".to_string() };
    (check.lhs.to_string(), check.rhs.to_string(), None, None, diff, equal)
}

/// Evaluates every check of `entry` at `params`.
pub fn run(entry: &IdentityEntry, params: &[i64], opts: &RunOptions) -> Result<Vec<EvalReport>> {
    let checks = entry.checks(params)?;
    let named: BTreeMap<String, i64> = entry.param_names().into_iter().map(String::from).zip(params.iter().copied()).collect();
    let mut envs = Envs { opts, by_digits: HashMap::new() };
    let mut out = Vec::with_capacity(checks.len());
    for check in &checks {
        let start = Instant::now();
        let digits = check.digits.or(opts.digits).unwrap_or(DEFAULT_DIGITS);
        let (lhs, rhs, lhs_expr, rhs_expr, diff, pass, tolerance) = match (&check.mode, &check.lhs, &check.rhs) {
            (Mode::ExactRational, Side::Rational(a), Side::Rational(b)) => {
                let r = exact_report(check, a == b);
                (r.0, r.1, r.2, r.3, r.4, r.5, None)
            }
            (Mode::ExactRational, Side::Rationals(a), Side::Rationals(b)) => {
                let r = exact_report(check, a == b);
                (r.0, r.1, r.2, r.3, r.4, r.5, None)
            }
            (Mode::ExactSymbolic, Side::Algebra(a), Side::Algebra(b)) => {
                let r = exact_report(check, a == b);
                (r.0, r.1, r.2, r.3, r.4, r.5, None)
            }
            (Mode::Numeric, l, r) => {
                let tol = check.tol.or(opts.tol).unwrap_or(DEFAULT_TOL);
                let env = envs.get(digits)?;
                let lv = l.value(digits, env)?;
                let rv = r.value(digits, env)?;
                let mut d = (&lv - &rv).abs();
                if check.relative && !rv.is_zero() {
                    d = &d / &rv.abs();
                }
                let df = d.to_f64();
                (
                    lv.to_fixed(digits),
                    rv.to_fixed(digits),
                    Some(l.to_string()),
                    Some(r.to_string()),
                    format!("{df:.3e}"),
                    df <= tol,
                    Some(tol),
                )
            }
            _ => {
                return Err(Error::Unsupported(format!(
                    "{}: {} check with incompatible sides",
                    entry.id, check.mode
                )))
            }
        };
        out.push(EvalReport {
            id: entry.id.to_string(),
            label: check.label.clone(),
            params: named.clone(),
            mode: check.mode,
            lhs,
            rhs,
            lhs_expr,
            rhs_expr,
            diff,
            digits,
            tolerance,
            relative: check.relative,
            pass,
            elapsed_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
        });
    }
    Ok(out)
}

/// Runs `entry` at every default parameter tuple.
pub fn run_defaults(entry: &IdentityEntry, opts: &RunOptions) -> Result<Vec<EvalReport>> {
    let mut out = Vec::new();
    for params in entry.default_params() {
        out.extend(run(entry, &params, opts)?);
    }
    Ok(out)
}

/// Runs every entry at its defaults on up to `jobs` threads, in registry order.
pub fn run_suite(opts: &RunOptions, jobs: usize) -> Vec<(&'static str, Result<Vec<EvalReport>>)> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    pool.install(|| {
        identity_registry()
            .par_iter()
            .map(|e| (e.id, run_defaults(e, opts)))
            .collect()
    })
}
