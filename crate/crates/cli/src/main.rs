use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use eulersum::arith::riemann_zeta;
use eulersum::closedforms::{h_star_sum, h_sum, hook, i_integral, power_zeta, power_zeta_star, star_hook, w};
use eulersum::combinatorics::Composition;
use eulersum::numeric::{
    euler_sum, eval_algebra, hurwitz_zeta, mzv, mzv_star, ConstantsCache, NumericEnv, SeriesConfig, CACHE_FILE,
};
use eulersum::registry::{self, find_entry, identity_registry, EvalReport, RunOptions};
use eulersum::symalg::AlgebraElement;
use eulersum::{Error, Rational};
use serde_json::json;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PRECISION: u8 = 3;

#[derive(Parser)]
#[command(name = "eulersum", version, about = "Multiple zeta values, Euler sums and their closed forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Decimal places of numeric output and evaluation budget
    #[arg(long, global = true)]
    digits: Option<u32>,

    /// Tolerance of numeric checks
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Write reports as JSON to this path (`-` for standard output)
    #[arg(long, global = true)]
    json: Option<PathBuf>,

    /// Worker threads for `suite`
    #[arg(long, global = true, default_value_t = 4)]
    jobs: usize,

    /// Largest summation cutoff of the series engine
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Record elapsed time per check (makes JSON output run-dependent)
    #[arg(long, global = true)]
    timing: bool,

    /// Directory of the constants cache
    #[arg(long, global = true, env = "EULERSUM_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a value numerically
    Eval {
        kind: EvalKind,
        /// Composition, parts and weight, or argument of the value
        args: Vec<String>,
    },
    /// Print an exact closed form
    ClosedForm {
        target: Target,
        args: Vec<String>,
        /// Also print the value to this many decimal places
        #[arg(long)]
        numeric: Option<u32>,
    },
    /// Run one identity, at the given parameters or at its defaults
    Verify {
        id: String,
        /// Parameters, positional or as name=value
        params: Vec<String>,
    },
    /// Run every identity at its defaults
    Suite,
    /// List the identities
    List,
    /// Manage the constants cache
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalKind {
    Mzv,
    Mzvstar,
    Euler,
    Zeta,
    Hurwitz,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    #[value(name = "W")]
    W,
    Hook,
    #[value(name = "I")]
    I,
    #[value(name = "H")]
    H,
    #[value(name = "Hstar")]
    Hstar,
    Powerzeta,
    Powerzetastar,
    Starhook,
}

#[derive(Subcommand)]
enum CacheAction {
    /// Precompute zeta values and linear sums
    Warm,
    /// Print the cache location and contents
    Show,
    /// Delete the cache file
    Clear,
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precision { .. } => EXIT_PRECISION,
            _ => EXIT_USAGE,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, msg: msg.into() }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn config(cli: &Cli) -> SeriesConfig {
    let mut c = SeriesConfig::default();
    if let Some(n) = cli.max_n {
        c.n_max = n;
    }
    c
}

fn cache_path(cli: &Cli) -> Option<PathBuf> {
    if let Some(dir) = &cli.cache_dir {
        return Some(dir.join(CACHE_FILE));
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
    Some(base.join("eulersum").join(CACHE_FILE))
}

fn load_cache(cli: &Cli) -> Option<ConstantsCache> {
    let path = cache_path(cli)?;
    if !path.exists() {
        return None;
    }
    match ConstantsCache::read(&path) {
        Ok(c) => Some(c),
        Err(e) => {
            eprintln!("warning: ignoring cache: {e}");
            None
        }
    }
}

fn env_for(cli: &Cli, digits: u32) -> Result<NumericEnv, Failure> {
    let env = NumericEnv::with_config(digits, config(cli));
    if let Some(cache) = load_cache(cli) {
        env.load_cache(&cache)?;
    }
    Ok(env)
}

fn dispatch(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Eval { kind, args } => eval(cli, *kind, args),
        Command::ClosedForm { target, args, numeric } => closed_form(cli, *target, args, *numeric),
        Command::Verify { id, params } => verify(cli, id, params),
        Command::Suite => suite(cli),
        Command::List => {
            for e in identity_registry() {
                let names = e.param_names().join(",");
                println!("{} {:<24} {:<15} [{}] {}", e.id, e.name, e.mode.to_string(), names, e.summary);
            }
            Ok(0)
        }
        Command::Cache { action } => cache(cli, action),
    }
}

fn arity(args: &[String], n: usize, what: &str) -> Result<(), Failure> {
    if args.len() != n {
        return Err(usage(format!("{what} takes {n} argument(s), got {}", args.len())));
    }
    Ok(())
}

fn parse<T: std::str::FromStr>(text: &str, what: &str) -> Result<T, Failure> {
    text.parse().map_err(|_| usage(format!("cannot parse {what} from `{text}`")))
}

fn parse_comp(text: &str) -> Result<Composition, Failure> {
    text.parse::<Composition>().map_err(Failure::from)
}

fn eval(cli: &Cli, kind: EvalKind, args: &[String]) -> Result<u8, Failure> {
    let digits = cli.digits.unwrap_or(registry::DEFAULT_DIGITS);
    let cfg = config(cli);
    let value = match kind {
        EvalKind::Mzv => {
            arity(args, 1, "mzv")?;
            mzv(&parse_comp(&args[0])?, digits, &cfg)?
        }
        EvalKind::Mzvstar => {
            arity(args, 1, "mzvstar")?;
            mzv_star(&parse_comp(&args[0])?, digits, &cfg)?
        }
        EvalKind::Euler => {
            arity(args, 2, "euler")?;
            let parts = parse_comp(&args[0])?;
            euler_sum(parts.parts(), parse(&args[1], "weight q")?, digits, &cfg)?
        }
        EvalKind::Zeta => {
            arity(args, 1, "zeta")?;
            riemann_zeta(parse(&args[0], "argument")?, digits)?
        }
        EvalKind::Hurwitz => {
            arity(args, 2, "hurwitz")?;
            let a: Rational = parse(&args[1], "shift a")?;
            hurwitz_zeta(parse(&args[0], "argument")?, &a, digits, &cfg)?
        }
    };
    println!("{}", value.to_fixed(digits));
    Ok(0)
}

fn ints(args: &[String], n: usize, what: &str) -> Result<Vec<u32>, Failure> {
    arity(args, n, what)?;
    args.iter().map(|a| parse(a, "integer")).collect()
}

fn closed_form(cli: &Cli, target: Target, args: &[String], numeric: Option<u32>) -> Result<u8, Failure> {
    let e: AlgebraElement = match target {
        Target::W => {
            let v = ints(args, 2, "W m k")?;
            w(v[0], v[1])?
        }
        Target::Hook => {
            let v = ints(args, 2, "hook m k")?;
            hook(v[0], v[1])?
        }
        Target::I => {
            let v = ints(args, 3, "I n m k")?;
            if v[0] == 0 {
                return Err(usage("I n m k needs n >= 1"));
            }
            i_integral(v[0] as u64, v[1], v[2])?
        }
        Target::H => {
            let v = ints(args, 2, "H m p")?;
            h_sum(v[0], v[1])?
        }
        Target::Hstar => {
            let v = ints(args, 2, "Hstar m p")?;
            h_star_sum(v[0], v[1])?
        }
        Target::Powerzeta => {
            let v = ints(args, 2, "powerzeta p m")?;
            power_zeta(v[0], v[1])?
        }
        Target::Powerzetastar => {
            let v = ints(args, 2, "powerzetastar p m")?;
            power_zeta_star(v[0], v[1])?
        }
        Target::Starhook => {
            let v = ints(args, 2, "starhook p m")?;
            star_hook(v[0], v[1])?
        }
    };
    println!("{e}");
    if let Some(d) = numeric {
        let env = env_for(cli, d)?;
        println!("{}", eval_algebra(&e, &env)?.to_fixed(d));
    }
    Ok(0)
}

fn run_options(cli: &Cli) -> RunOptions {
    RunOptions {
        digits: cli.digits,
        tol: cli.tol,
        config: config(cli),
        timing: cli.timing,
        cache: load_cache(cli).map(Arc::new),
    }
}

fn parse_params(entry: &registry::IdentityEntry, raw: &[String]) -> Result<Vec<i64>, Failure> {
    let names = entry.param_names();
    if raw.len() != names.len() {
        return Err(usage(format!("{} takes parameters ({}), got {}", entry.id, names.join(", "), raw.len())));
    }
    let mut out = vec![None; names.len()];
    for (pos, item) in raw.iter().enumerate() {
        let (slot, text) = match item.split_once('=') {
            Some((name, v)) => {
                let i = names.iter().position(|n| *n == name).ok_or_else(|| usage(format!("{} has no parameter `{name}`", entry.id)))?;
                (i, v)
            }
            None => (pos, item.as_str()),
        };
        if out[slot].is_some() {
            return Err(usage(format!("parameter `{}` given twice", names[slot])));
        }
        out[slot] = Some(parse::<i64>(text, names[slot])?);
    }
    Ok(out.into_iter().map(|v| v.expect("all slots filled")).collect())
}

fn report_line(r: &EvalReport) -> String {
    let params = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    let detail = match r.tolerance {
        Some(t) => format!("diff {} (tol {t:e}{}, {} digits)", r.diff, if r.relative { " relative" } else { "" }, r.digits),
        None => r.diff.clone(),
    };
    let params = if params.is_empty() { String::new() } else { format!(" [{params}]") };
    format!("{verdict} {}{params} {}: {detail}", r.id, r.label)
}

fn write_json(path: &Path, value: &serde_json::Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize") + "\n";
    if path == Path::new("-") {
        std::io::stdout().write_all(text.as_bytes()).map_err(|e| usage(e.to_string()))?;
    } else {
        std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn document(reports: &[EvalReport], errors: &[serde_json::Value]) -> serde_json::Value {
    let passed = reports.iter().filter(|r| r.pass).count();
    json!({
        "passed": passed,
        "failed": reports.len() - passed,
        "errors": errors,
        "reports": reports,
    })
}

fn verify(cli: &Cli, id: &str, raw: &[String]) -> Result<u8, Failure> {
    let entry = find_entry(id).ok_or_else(|| usage(format!("unknown identity `{id}`; see `eulersum list`")))?;
    let opts = run_options(cli);
    let reports = if raw.is_empty() {
        registry::run_defaults(entry, &opts)?
    } else {
        registry::run(entry, &parse_params(entry, raw)?, &opts)?
    };
    let to_stdout = cli.json.as_deref() == Some(Path::new("-"));
    if !to_stdout {
        for r in &reports {
            println!("{}", report_line(r));
        }
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    if let Some(path) = &cli.json {
        write_json(path, &document(&reports, &[]))?;
    }
    if !to_stdout {
        println!("{}: {passed}/{} passed", entry.id, reports.len());
    }
    Ok(if passed == reports.len() { 0 } else { EXIT_FAIL })
}

fn suite(cli: &Cli) -> Result<u8, Failure> {
    let opts = run_options(cli);
    let results = registry::run_suite(&opts, cli.jobs);
    let to_stdout = cli.json.as_deref() == Some(Path::new("-"));
    let mut all = Vec::new();
    let mut errors = Vec::new();
    let mut precision = false;
    for (id, res) in results {
        match res {
            Ok(reports) => {
                let passed = reports.iter().filter(|r| r.pass).count();
                if !to_stdout {
                    let verdict = if passed == reports.len() { "PASS" } else { "FAIL" };
                    println!("{verdict} {id} {passed}/{}", reports.len());
                    for r in reports.iter().filter(|r| !r.pass) {
                        println!("  {}", report_line(r));
                    }
                }
                all.extend(reports);
            }
            Err(e) => {
                precision |= matches!(e, Error::Precision { .. });
                if !to_stdout {
                    println!("ERROR {id}: {e}");
                }
                errors.push(json!({ "id": id, "error": e.to_string() }));
            }
        }
    }
    let passed = all.iter().filter(|r| r.pass).count();
    if let Some(path) = &cli.json {
        write_json(path, &document(&all, &errors))?;
    }
    if !to_stdout {
        println!("suite: {passed}/{} checks passed, {} entries with errors", all.len(), errors.len());
    }
    Ok(if precision {
        EXIT_PRECISION
    } else if passed == all.len() && errors.is_empty() {
        0
    } else {
        EXIT_FAIL
    })
}

fn cache(cli: &Cli, action: &CacheAction) -> Result<u8, Failure> {
    let path = cache_path(cli).ok_or_else(|| usage("no cache directory: set EULERSUM_CACHE_DIR"))?;
    match action {
        CacheAction::Warm => {
            let digits = cli.digits.unwrap_or(30);
            let env = NumericEnv::with_config(digits, config(cli));
            env.warm()?;
            let cache = env.to_cache()?;
            cache.write(&path)?;
            println!("wrote {} values at {} digits to {}", cache.values.len(), cache.digits, path.display());
        }
        CacheAction::Show => {
            println!("{}", path.display());
            if path.exists() {
                let cache = ConstantsCache::read(&path)?;
                println!("digits {} levels {} n_max {}", cache.digits, cache.levels, cache.n_max);
                for (k, v) in &cache.values {
                    println!("{k} = {v}");
                }
            } else {
                println!("(empty)");
            }
        }
        CacheAction::Clear => {
            if path.exists() {
                std::fs::remove_file(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            println!("cleared {}", path.display());
        }
    }
    Ok(0)
}
