use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::series::SeriesConfig;
use super::values::{linear_sum, mzv};
use crate::arith::{euler_gamma, riemann_zeta, HPReal};
use crate::error::{Error, Result};
use crate::symalg::{AlgebraElement, Atom};

/// Extra digits used for atom values so that coefficient growth stays within budget.
const ATOM_GUARD: u32 = 6;

/// Digit budget, engine parameters and memoized atom values.
#[derive(Debug)]
pub struct NumericEnv {
    digits: u32,
    config: SeriesConfig,
    memo: Mutex<HashMap<Atom, HPReal>>,
}

impl NumericEnv {
    pub fn new(digits: u32) -> NumericEnv {
        NumericEnv::with_config(digits, SeriesConfig::default())
    }

    pub fn with_config(digits: u32, config: SeriesConfig) -> NumericEnv {
        NumericEnv { digits, config, memo: Mutex::new(HashMap::new()) }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn config(&self) -> &SeriesConfig {
        &self.config
    }

    fn atom_digits(&self) -> u32 {
        self.digits + ATOM_GUARD
    }

    pub fn atom_value(&self, atom: &Atom) -> Result<HPReal> {
        if let Some(v) = self.memo.lock().unwrap().get(atom) {
            return Ok(v.clone());
        }
        let d = self.atom_digits();
        let v = match atom {
            Atom::Zeta(k) => riemann_zeta(*k, d)?,
            Atom::Linear(p, q) => linear_sum(*p, *q, d, &self.config)?,
            Atom::Mzv(s) => mzv(s, d, &self.config).map_err(|e| match e {
                Error::Unsupported(msg) => Error::UnresolvedAtom(format!("{atom}: {msg}")),
                other => other,
            })?,
        };
        self.memo.lock().unwrap().insert(atom.clone(), v.clone());
        Ok(v)
    }

    pub fn preload(&self, atom: Atom, value: HPReal) {
        self.memo.lock().unwrap().insert(atom, value);
    }

    pub fn eval(&self, e: &AlgebraElement) -> Result<HPReal> {
        let d = self.atom_digits();
        let mut acc = HPReal::zero(d);
        for (m, c) in e.terms() {
            let mut t = HPReal::from_rational(c, d);
            for (a, k) in m.factors() {
                t = t * self.atom_value(a)?.powi(*k);
            }
            acc = acc + t;
        }
        Ok(acc.with_digits(self.digits))
    }

    /// Evaluates and stores the constants listed in [`warm_atoms`].
    pub fn warm(&self) -> Result<()> {
        for a in warm_atoms() {
            self.atom_value(&a)?;
        }
        Ok(())
    }

    pub fn to_cache(&self) -> Result<ConstantsCache> {
        let d = self.atom_digits();
        let mut values = BTreeMap::new();
        for (a, v) in self.memo.lock().unwrap().iter() {
            values.insert(a.to_string(), v.to_fixed(d));
        }
        values.insert("gamma".into(), euler_gamma(d)?.to_fixed(d));
        Ok(ConstantsCache {
            format: CACHE_FORMAT,
            levels: self.config.levels,
            n_max: self.config.n_max,
            digits: d,
            values,
        })
    }

    /// Loads cached values when the cache was produced by the same engine
    /// parameters at a sufficient budget; returns how many atoms were loaded.
    pub fn load_cache(&self, cache: &ConstantsCache) -> Result<usize> {
        if !cache.compatible_with(&self.config) || cache.digits < self.atom_digits() {
            return Ok(0);
        }
        let mut n = 0;
        for (key, text) in &cache.values {
            if key == "gamma" {
                continue;
            }
            let e: AlgebraElement = key.parse()?;
            let Some(atom) = e.atoms().into_iter().next() else { continue };
            self.preload(atom, HPReal::parse(text, self.atom_digits())?);
            n += 1;
        }
        Ok(n)
    }
}

/// `z(2..=13)` and the weight-8 and weight-10 linear sums used by the closed forms.
pub fn warm_atoms() -> Vec<Atom> {
    let mut out: Vec<Atom> = (2..=13).map(Atom::Zeta).collect();
    out.push(Atom::Linear(2, 6));
    out.push(Atom::Linear(2, 8));
    out
}

pub fn eval_algebra(e: &AlgebraElement, env: &NumericEnv) -> Result<HPReal> {
    env.eval(e)
}

pub const CACHE_FORMAT: u32 = 1;
pub const CACHE_FILE: &str = "constants.json";

/// On-disk constants cache, keyed by the engine parameters that produced it.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ConstantsCache {
    pub format: u32,
    pub levels: u32,
    pub n_max: usize,
    pub digits: u32,
    pub values: BTreeMap<String, String>,
}

impl ConstantsCache {
    pub fn compatible_with(&self, config: &SeriesConfig) -> bool {
        self.format == CACHE_FORMAT && self.levels == config.levels && self.n_max == config.n_max
    }

    pub fn read(path: &Path) -> Result<ConstantsCache> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| Error::Cache(format!("{}: {e}", dir.display())))?;
        }
        let text = serde_json::to_string_pretty(self).map_err(|e| Error::Cache(e.to_string()))?;
        std::fs::write(path, text + "\n").map_err(|e| Error::Cache(format!("{}: {e}", path.display())))
    }
}
