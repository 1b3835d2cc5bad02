//! Command-line interface. [`run`] returns the process exit status: 0 on
//! success, 1 when a verification fails, 2 for usage and input errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{value_parser, Parser, Subcommand, ValueEnum};
use hyperlam_core::capacity::{capacity, murai_check_with, CapacityEstimate, CapacityOptions, FeketeOptions, MuraiReport};
use hyperlam_core::density::{modular_constant_m, DensityMethod, DensityValue};
use hyperlam_core::domain::{parse_complex, parse_domain, DomainSpec};
use hyperlam_core::ratio::{
    conjecture_check, density, distinct_slit_pairs, ratio, same_domain_pairs, sweep_punctured, sweep_slit,
    verify_lower_bound, ConjectureReport, RatioOptions, RatioReport, SweepMode, SweepRow,
};
use hyperlam_core::{Complex, Error};
use serde_json::{Map, Value};

use crate::format::load_compact_set;
use crate::number::json_number;
use crate::report::{OutputFormat, Report};
use crate::CliError;

pub const PRECISION_ENV: &str = "HYPERLAM_PRECISION";
const DEFAULT_PRECISION: usize = 12;
const CONJECTURE_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "hyperlam", version, about = "Hyperbolic densities, logarithmic capacity and density ratios")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    output: OutputFormat,
    /// Seed for the Fekete optimizer.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Number of Fekete points.
    #[arg(long = "fekete-n", global = true, default_value_t = 64, value_parser = value_parser!(u32).range(2..))]
    fekete_n: u32,
    /// Significant digits in numeric output [default: $HYPERLAM_PRECISION or 12].
    #[arg(long, global = true, value_parser = value_parser!(u8).range(4..=17))]
    precision: Option<u8>,
    /// Use the Fekete oracle even when a closed form is available.
    #[arg(long, global = true)]
    fekete: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hyperbolic density of a domain at a point.
    Density {
        #[arg(value_parser = domain_arg)]
        domain: DomainSpec,
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = complex_arg)]
        z: Complex,
    },
    /// Logarithmic capacity of a compact set given as JSON or a JSON file.
    Capacity { set: String },
    /// Density ratio of two domains inside the disk of radius R.
    Ratio {
        #[arg(value_parser = domain_arg)]
        d1: DomainSpec,
        #[arg(value_parser = domain_arg)]
        d2: DomainSpec,
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = complex_arg)]
        z: Complex,
        #[arg(long = "R", default_value_t = 1.0, allow_negative_numbers = true)]
        r: f64,
    },
    /// Ratio bounds for the punctured-disk pair.
    SweepPunctured {
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        a: Vec<f64>,
    },
    /// Exact ratios for the slit-disk pair.
    SweepSlit {
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        a: Vec<f64>,
    },
    /// Run a built-in verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::LowerBound)]
        suite: Suite,
    },
    /// Additive and product inequalities on the slit-disk pair.
    Conjecture {
        /// Values of a in (0, 1) [default: k/101 for k = 1..=100].
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        a: Vec<f64>,
    },
    /// Check cap(K₁ ∪ K₂)·cap(K₁ ∩ K₂) ≤ cap(K₁)·cap(K₂) in its capacity form.
    Murai { first: String, second: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    LowerBound,
    Slit,
    Punctured,
    Conjecture,
}

fn domain_arg(text: &str) -> Result<DomainSpec, String> {
    parse_domain(text).map_err(|e| located(text, &e))
}

fn complex_arg(text: &str) -> Result<Complex, String> {
    parse_complex(text).map_err(|e| located(text, &e))
}

/// Appends the token at the reported byte offset to parse errors.
fn located(text: &str, e: &Error) -> String {
    let position = match e {
        Error::Syntax { position, .. } | Error::Semantic { position, .. } => *position,
        _ => return e.to_string(),
    };
    let rest = text.get(position..).unwrap_or("").trim_start();
    let token: String = match rest.find(')') {
        Some(end) => rest[..=end].to_string(),
        None => rest.split_whitespace().next().unwrap_or("").to_string(),
    };
    if token.is_empty() {
        format!("{e} (at end of input)")
    } else {
        format!("{e} near `{token}`")
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok((report, passed)) => {
            let rendered = report.render(cli.output, out).and_then(|_| out.flush());
            if let Err(e) = rendered {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            if passed {
                0
            } else {
                let _ = writeln!(err, "verification failed");
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn resolve_precision(flag: Option<u8>) -> Result<usize, CliError> {
    if let Some(p) = flag {
        return Ok(p as usize);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(p) if (4..=17).contains(&p) => Ok(p),
            _ => Err(CliError::Usage(format!("{PRECISION_ENV}=`{text}` must be an integer in [4, 17]"))),
        },
        Err(_) => Ok(DEFAULT_PRECISION),
    }
}

fn execute(cli: &Cli) -> Result<(Report, bool), CliError> {
    let fmt = Fmt { digits: resolve_precision(cli.precision)? };
    let ratio_options = RatioOptions {
        fekete_n: cli.fekete_n as usize,
        seed: cli.seed,
        force_fekete: cli.fekete,
        fekete: FeketeOptions::default(),
    };
    let capacity_options = CapacityOptions {
        fekete_n: cli.fekete_n as usize,
        seed: cli.seed,
        fekete: FeketeOptions::default(),
        force_fekete: cli.fekete,
    };
    match &cli.command {
        Command::Density { domain, z } => {
            let v = density(domain, *z, &ratio_options)?;
            Ok((Report::record("density", fmt.density(&v)), true))
        }
        Command::Capacity { set } => {
            let k = load_compact_set(set)?;
            let e = capacity(&k, &capacity_options)?;
            Ok((Report::record("capacity", fmt.capacity(&e)), true))
        }
        Command::Ratio { d1, d2, z, r } => {
            let report = ratio(d1, d2, *z, *r, &ratio_options)?;
            let mut record = Map::new();
            record.insert("d1".into(), d1.to_string().into());
            record.insert("d2".into(), d2.to_string().into());
            record.insert("z".into(), fmt.complex(*z));
            record.insert("R".into(), fmt.num(*r));
            record.extend(fmt.ratio(&report));
            Ok((Report::record("ratio", record), true))
        }
        Command::SweepPunctured { a } => {
            let rows = sweep_punctured(a)?;
            Ok((Report::rows("punctured-disk sweep", rows.iter().map(|r| fmt.sweep_row(r)).collect()), true))
        }
        Command::SweepSlit { a } => {
            let rows = sweep_slit(a)?;
            Ok((Report::rows("slit-disk sweep", rows.iter().map(|r| fmt.sweep_row(r)).collect()), true))
        }
        Command::Conjecture { a } => {
            let a = if a.is_empty() { default_conjecture_grid() } else { a.clone() };
            conjecture_report(&fmt, &a, "conjecture")
        }
        Command::Verify { suite } => match suite {
            Suite::LowerBound => verify_lower_bound_suite(&fmt),
            Suite::Slit => verify_slit_suite(&fmt),
            Suite::Punctured => verify_punctured_suite(&fmt),
            Suite::Conjecture => conjecture_report(&fmt, &default_conjecture_grid(), "verify conjecture"),
        },
        Command::Murai { first, second } => {
            let k1 = load_compact_set(first)?;
            let k2 = load_compact_set(second)?;
            let m = murai_check_with(&k1, &k2, &capacity_options)?;
            Ok((Report::record("murai", fmt.murai(&m)), m.holds))
        }
    }
}

fn default_conjecture_grid() -> Vec<f64> {
    (1..=100).map(|k| k as f64 / 101.0).collect()
}

fn status(ok: bool) -> Value {
    if ok { "pass" } else { "fail" }.into()
}

fn summary(suite: &str, rows: usize, failed: usize) -> Map<String, Value> {
    let mut s = Map::new();
    s.insert("suite".into(), suite.into());
    s.insert("cases".into(), rows.into());
    s.insert("failed".into(), failed.into());
    s.insert("status".into(), status(failed == 0));
    s
}

fn verify_lower_bound_suite(fmt: &Fmt) -> Result<(Report, bool), CliError> {
    let mut pairs = same_domain_pairs()?;
    pairs.extend(distinct_slit_pairs()?);
    let report = verify_lower_bound(&pairs)?;
    let rows: Vec<_> = report
        .rows
        .iter()
        .map(|row| {
            let mut r = Map::new();
            r.insert("d1".into(), row.pair.d1.to_string().into());
            r.insert("d2".into(), row.pair.d2.to_string().into());
            r.insert("z".into(), fmt.complex(row.pair.z));
            r.insert("R".into(), fmt.num(row.pair.r));
            r.insert("Q".into(), fmt.num(row.report.q));
            r.insert("lambda1".into(), fmt.num(row.report.lambda1.value));
            r.insert("lambda2".into(), fmt.num(row.report.lambda2.value));
            r.insert("lambda_cap".into(), fmt.num(row.report.lambda_cap.value));
            r.insert("same_domain".into(), row.same_domain.into());
            r.insert("at_least_half".into(), row.at_least_half.into());
            r.insert("equality_case".into(), row.equality_case.into());
            r.insert("dominates".into(), row.dominates.into());
            r.insert("status".into(), status(row.passed()));
            r
        })
        .collect();
    let failed = report.rows.iter().filter(|r| !r.passed()).count();
    let n = rows.len();
    Ok((Report::rows("lower-bound verification", rows).with_summary(summary("lower-bound", n, failed)), report.passed()))
}

fn verify_slit_suite(fmt: &Fmt) -> Result<(Report, bool), CliError> {
    let rows = sweep_slit(&[0.9, 0.75, 0.5, 0.25, 0.1, 0.01, 1e-3, 1e-4, 1e-6])?;
    let mut previous = 0.0;
    let mut failed = 0;
    let out: Vec<_> = rows
        .iter()
        .map(|row| {
            let a = row.a;
            let expected = (1.0 + a * a) / ((1.0 + a) * (1.0 + a));
            let ok = row.mode == SweepMode::Exact
                && (row.q_or_bound - expected).abs() <= 1e-12
                && row.q_or_bound > 0.5
                && row.q_or_bound < 1.0
                && row.q_or_bound > previous;
            previous = row.q_or_bound;
            failed += usize::from(!ok);
            let mut r = fmt.sweep_row(row);
            r.insert("expected".into(), fmt.num(expected));
            r.insert("status".into(), status(ok));
            r
        })
        .collect();
    let n = out.len();
    Ok((Report::rows("slit-disk verification", out).with_summary(summary("slit", n, failed)), failed == 0))
}

fn verify_punctured_suite(fmt: &Fmt) -> Result<(Report, bool), CliError> {
    let m = modular_constant_m().m;
    let rows = sweep_punctured(&[0.4, 0.1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6])?;
    let mut previous = 0.0;
    let mut failed = 0;
    let out: Vec<_> = rows
        .iter()
        .map(|row| {
            let a = row.a;
            let expected = m * (1.0 / a).ln() / (1.0 - a * a);
            let ok = row.mode == SweepMode::LowerBound
                && (row.q_or_bound - expected).abs() <= 1e-12 * expected.max(1.0)
                && row.q_or_bound > previous;
            previous = row.q_or_bound;
            failed += usize::from(!ok);
            let mut r = fmt.sweep_row(row);
            r.insert("expected".into(), fmt.num(expected));
            r.insert("status".into(), status(ok));
            r
        })
        .collect();
    let n = out.len();
    let mut s = summary("punctured", n, failed);
    s.insert("max_bound".into(), fmt.num(previous));
    Ok((Report::rows("punctured-disk verification", out).with_summary(s), failed == 0))
}

fn conjecture_report(fmt: &Fmt, a_values: &[f64], title: &str) -> Result<(Report, bool), CliError> {
    let reports = a_values.iter().map(|&a| conjecture_check(a)).collect::<Result<Vec<_>, _>>()?;
    let passes = |r: &ConjectureReport| r.additive_equality(CONJECTURE_TOL) && r.multiplicative_strict();
    let failed = reports.iter().filter(|r| !passes(r)).count();
    let rows: Vec<_> = reports
        .iter()
        .map(|r| {
            let mut row = fmt.conjecture(r);
            row.insert("status".into(), status(passes(r)));
            row
        })
        .collect();
    let worst = reports.iter().map(|r| r.additive_slack.abs()).fold(0.0, f64::max);
    let mut s = summary("conjecture", rows.len(), failed);
    s.insert("max_additive_slack".into(), fmt.num(worst));
    Ok((Report::rows(title, rows).with_summary(s), failed == 0))
}

/// Turns library results into records with a fixed number of digits.
struct Fmt {
    digits: usize,
}

impl Fmt {
    fn num(&self, x: f64) -> Value {
        json_number(x, self.digits)
    }

    fn complex(&self, z: Complex) -> Value {
        let mut m = Map::new();
        m.insert("re".into(), self.num(z.re));
        m.insert("im".into(), self.num(z.im));
        Value::Object(m)
    }

    fn density(&self, v: &DensityValue) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("value".into(), self.num(v.value));
        m.insert("method".into(), v.method.as_str().into());
        let via = match v.method {
            DensityMethod::CapacityReduction(c) => Value::from(c.as_str()),
            _ => Value::Null,
        };
        m.insert("capacity_method".into(), via);
        m.insert("domain".into(), v.domain.to_string().into());
        m.insert("point".into(), self.complex(v.point));
        m
    }

    fn capacity(&self, e: &CapacityEstimate) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("value".into(), self.num(e.value));
        m.insert("method".into(), e.method.as_str().into());
        m.insert("n_points".into(), e.n_points.map_or(Value::Null, Value::from));
        let bracket = e.bracket.map_or(Value::Null, |(lo, hi)| {
            let mut b = Map::new();
            b.insert("lower".into(), self.num(lo));
            b.insert("upper".into(), self.num(hi));
            Value::Object(b)
        });
        m.insert("bracket".into(), bracket);
        m
    }

    fn ratio(&self, r: &RatioReport) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("Q".into(), self.num(r.q));
        m.insert("lower_bound_mode".into(), r.lower_bound_mode.into());
        m.insert("exact".into(), r.is_exact().into());
        m.insert("lambda1".into(), Value::Object(self.density(&r.lambda1)));
        m.insert("lambda2".into(), Value::Object(self.density(&r.lambda2)));
        m.insert("lambda_cap".into(), Value::Object(self.density(&r.lambda_cap)));
        let cup = r.lambda_cup.as_ref().map_or(Value::Null, |v| Value::Object(self.density(v)));
        m.insert("lambda_cup".into(), cup);
        m
    }

    fn sweep_row(&self, r: &SweepRow) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("a".into(), self.num(r.a));
        m.insert("lambda1".into(), self.num(r.lambda1));
        m.insert("lambda2".into(), self.num(r.lambda2));
        m.insert("lambda_cap".into(), self.num(r.lambda_cap));
        m.insert("lambda_cup".into(), r.lambda_cup.map_or(Value::Null, |x| self.num(x)));
        m.insert("Q".into(), self.num(r.q_or_bound));
        m.insert("mode".into(), r.mode.as_str().into());
        m
    }

    fn conjecture(&self, r: &ConjectureReport) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("a".into(), self.num(r.a));
        m.insert("lambda1".into(), self.num(r.lambda1));
        m.insert("lambda2".into(), self.num(r.lambda2));
        m.insert("lambda_cap".into(), self.num(r.lambda_cap));
        m.insert("lambda_cup".into(), self.num(r.lambda_cup));
        m.insert("additive_lhs".into(), self.num(r.additive_lhs));
        m.insert("additive_rhs".into(), self.num(r.additive_rhs));
        m.insert("additive_slack".into(), self.num(r.additive_slack));
        m.insert("multiplicative_lhs".into(), self.num(r.multiplicative_lhs));
        m.insert("multiplicative_rhs".into(), self.num(r.multiplicative_rhs));
        m.insert("multiplicative_slack".into(), self.num(r.multiplicative_slack));
        m
    }

    fn murai(&self, r: &MuraiReport) -> Map<String, Value> {
        let mut m = Map::new();
        m.insert("holds".into(), r.holds.into());
        m.insert("lhs".into(), self.num(r.lhs));
        m.insert("rhs".into(), self.num(r.rhs));
        m.insert("slack".into(), self.num(r.slack));
        m.insert("tolerance".into(), self.num(r.tolerance));
        m.insert("union".into(), Value::Object(self.capacity(&r.union)));
        m.insert("first".into(), Value::Object(self.capacity(&r.first)));
        m.insert("second".into(), Value::Object(self.capacity(&r.second)));
        m
    }
}
