//! Argument definitions and the three commands: `jack`, `bessel`, `verify`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use jackprod_core::bessel::{
    bessel_b2_double_integral, bessel_b2_series, hyp0f1_single_integral, resolve_double_integral_order, Multiplicity,
    DEFAULT_BESSEL_NODES, DEFAULT_MAX_DEGREE,
};
use jackprod_core::error::Error;
use jackprod_core::partition::{JackParameter, Partition};
use jackprod_core::sample::DEFAULT_SEED;
use jackprod_core::scalar::{Rational, Scalar};

use crate::cache::JackCache;
use crate::format::{fmt_f64, F17};
use crate::harness::{run, HarnessError, Identity, SweepConfig};
use crate::parse::{
    parse_f64_pair, parse_partition, parse_rational, parse_rational_list, parse_rational_pair, ParseError,
};
use crate::report::{write_csv, write_pretty, Summary, VerifyDocument};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOLUTION: u8 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(
    name = "jackprod",
    version,
    about = "Jack polynomials, their two-variable product formula, and type B2 Bessel functions"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub output: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand P_λ^k in the monomial basis, optionally evaluating it
    Jack(JackArgs),
    /// Evaluate the type B2 Bessel function J^κ(x, y)
    Bessel(BesselArgs),
    /// Run a seeded verification sweep
    Verify(VerifyArgs),
}

/// A comma-separated list kept as one argument.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalList(pub Vec<Rational>);

fn rational_list(s: &str) -> Result<RationalList, ParseError> {
    parse_rational_list(s).map(RationalList)
}

fn positive_tol(s: &str) -> Result<f64, ParseError> {
    let v = parse_rational(s)?.to_f64();
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(ParseError(format!("tolerance must be positive, got {s:?}")))
    }
}

fn at_least_one(s: &str) -> Result<usize, ParseError> {
    match s.trim().parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(ParseError(format!("expected a positive integer, got {s:?}"))),
    }
}

#[derive(Debug, Args)]
pub struct JackArgs {
    /// Partition, e.g. 3,1
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    /// Jack parameter k = 1/α as an exact rational, e.g. 1/2
    #[arg(long, value_parser = parse_rational)]
    pub k: Rational,
    /// Number of variables (defaults to the length of --x, else 2)
    #[arg(long)]
    pub n: Option<usize>,
    /// Evaluation point, exact rationals, e.g. 3,2
    #[arg(long, value_parser = rational_list)]
    pub x: Option<RationalList>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BesselMethod {
    Series,
    Theorem3,
    Lemma4,
}

#[derive(Debug, Args)]
pub struct BesselArgs {
    /// Multiplicity κ₁,κ₂
    #[arg(long, value_parser = parse_rational_pair)]
    pub kappa: [Rational; 2],
    /// First argument x₁,x₂
    #[arg(long, value_parser = parse_f64_pair, allow_hyphen_values = true)]
    pub x: [f64; 2],
    /// Second argument y₁,y₂
    #[arg(long, value_parser = parse_f64_pair, allow_hyphen_values = true)]
    pub y: [f64; 2],
    /// Series expansion, double integral, or single integral (needs y₂ = 0 or x₂ = 0)
    #[arg(long, value_enum, default_value_t = BesselMethod::Series)]
    pub method: BesselMethod,
    /// Truncation degree of the Jack series
    #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
    pub max_degree: u32,
    /// Quadrature nodes per axis
    #[arg(long, value_parser = at_least_one, default_value_t = DEFAULT_BESSEL_NODES)]
    pub nodes: usize,
    /// Seed for the order-resolution points
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub identity: Identity,
    /// Jack parameter(s), comma-separated rationals
    #[arg(long, value_parser = rational_list)]
    pub k: Option<RationalList>,
    /// Multiplicity κ₁,κ₂; repeat for several
    #[arg(long, value_parser = parse_rational_pair)]
    pub kappa: Vec<[Rational; 2]>,
    /// Largest |λ| in the sweep
    #[arg(long)]
    pub lambda_max: Option<u32>,
    /// Random points per case
    #[arg(long, value_parser = at_least_one)]
    pub samples: Option<usize>,
    /// Relative tolerance (each identity has its own default)
    #[arg(long, value_parser = positive_tol)]
    pub tol: Option<f64>,
    /// Seed for the point sampler
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Quadrature nodes
    #[arg(long, value_parser = at_least_one)]
    pub npoints: Option<usize>,
    /// Angles for the zonal average
    #[arg(long, value_parser = at_least_one)]
    pub ntheta: Option<usize>,
    /// Truncation degree of the Jack series
    #[arg(long)]
    pub max_degree: Option<u32>,
}

/// Exit code and the text destined for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: u8, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn error(code: u8, message: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

fn core_error(e: Error) -> Outcome {
    match e {
        Error::ResolutionFailure { .. } => Outcome::error(EXIT_RESOLUTION, e),
        other => Outcome::error(EXIT_USAGE, other),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

pub fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Jack(args) => cmd_jack(args, cli.output),
        Command::Bessel(args) => cmd_bessel(args, cli.output),
        Command::Verify(args) => cmd_verify(args, cli.output),
    }
}

#[derive(Serialize)]
struct Document<'a, C: Serialize, R: Serialize> {
    command: &'static str,
    config: &'a C,
    result: &'a R,
}

#[derive(Serialize)]
struct Term {
    partition: Vec<u32>,
    coeff: String,
}

#[derive(Serialize)]
struct PolynomialJson {
    lambda: Vec<u32>,
    k: String,
    nvars: usize,
    terms: Vec<Term>,
}

#[derive(Serialize)]
struct JackConfig {
    lambda: Vec<u32>,
    k: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<Vec<String>>,
}

#[derive(Serialize)]
struct JackResult {
    polynomial: PolynomialJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value_f64: Option<F17>,
}

pub fn cmd_jack(args: &JackArgs, output: OutputFormat) -> Outcome {
    let x = args.x.as_ref().map(|l| l.0.clone());
    let n = args.n.or(x.as_ref().map(Vec::len)).unwrap_or(2);
    let k = match JackParameter::new(args.k.clone()) {
        Ok(k) => k,
        Err(e) => return core_error(e),
    };
    let cache = JackCache::new();
    let p = match cache.get_or_compute(&args.lambda, &k, n) {
        Ok(p) => p,
        Err(e) => return core_error(e),
    };
    let value = match &x {
        Some(x) => match p.eval(x) {
            Ok(v) => Some(v),
            Err(e) => return core_error(e),
        },
        None => None,
    };
    let terms: Vec<Term> =
        p.expansion().terms().map(|(mu, c)| Term { partition: mu.parts().to_vec(), coeff: c.to_string() }).collect();
    let text = match output {
        OutputFormat::Json => {
            let config = JackConfig {
                lambda: args.lambda.parts().to_vec(),
                k: args.k.to_string(),
                n,
                x: x.as_ref().map(|x| x.iter().map(ToString::to_string).collect()),
            };
            let result = JackResult {
                polynomial: PolynomialJson {
                    lambda: args.lambda.parts().to_vec(),
                    k: args.k.to_string(),
                    nvars: n,
                    terms,
                },
                value: value.as_ref().map(ToString::to_string),
                value_f64: value.as_ref().map(|v| F17(v.to_f64())),
            };
            to_json(&Document { command: "jack", config: &config, result: &result })
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut rows = vec![["partition".to_string(), "coeff".to_string()]];
            rows.extend(terms.iter().map(|t| [partition_text(&t.partition), t.coeff.clone()]));
            if let Some(v) = &value {
                rows.push(["value".to_string(), v.to_string()]);
            }
            for r in rows {
                w.write_record(r).expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
        }
        OutputFormat::Pretty => {
            let mut s = format!("P_{}^(k={}) in {} variables\n", args.lambda, args.k, n);
            for t in &terms {
                s += &format!("  m_{}  {}\n", partition_text(&t.partition), t.coeff);
            }
            if let Some(v) = &value {
                s += &format!("value = {} ({})\n", v, fmt_f64(v.to_f64()));
            }
            s
        }
    };
    Outcome::ok(EXIT_PASS, text)
}

fn partition_text(parts: &[u32]) -> String {
    let inner: Vec<String> = parts.iter().map(u32::to_string).collect();
    format!("({})", inner.join(","))
}

#[derive(Serialize)]
struct BesselConfig {
    kappa: [String; 2],
    x: [F17; 2],
    y: [F17; 2],
    method: BesselMethod,
    max_degree: u32,
    nodes: usize,
    seed: u64,
}

#[derive(Serialize)]
struct BesselResult {
    method: BesselMethod,
    value: F17,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncation: Option<F17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    resolved_order: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    selected_error: Option<F17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rejected_error: Option<F17>,
}

fn bessel_result(args: &BesselArgs) -> Result<BesselResult, Outcome> {
    let kappa = Multiplicity::new(args.kappa[0].to_f64(), args.kappa[1].to_f64()).map_err(core_error)?;
    let mut result = BesselResult {
        method: args.method,
        value: F17(f64::NAN),
        truncation: None,
        resolved_order: None,
        selected_error: None,
        rejected_error: None,
    };
    match args.method {
        BesselMethod::Series => {
            let s = bessel_b2_series(&kappa, args.x, args.y, args.max_degree).map_err(core_error)?;
            result.value = F17(s.value);
            result.truncation = Some(F17(s.truncation));
        }
        BesselMethod::Theorem3 => {
            let r = resolve_double_integral_order(&kappa, args.seed).map_err(core_error)?;
            let (x, y) = (args.x.map(f64::abs), args.y.map(f64::abs));
            let v = bessel_b2_double_integral(&kappa, x, y, args.nodes, args.nodes, r.order).map_err(core_error)?;
            result.value = F17(v);
            result.resolved_order = Some(r.order.label());
            result.selected_error = Some(F17(r.selected_error));
            result.rejected_error = Some(F17(r.rejected_error));
        }
        BesselMethod::Lemma4 => {
            // J depends on x², y² only; with one vanishing coordinate the
            // series collapses onto the single-integral family by homogeneity
            let (x, y) = (args.x.map(|v| 0.5 * v * v), args.y.map(|v| 0.5 * v * v));
            let scaled = if y[1] == 0.0 {
                [x[0] * y[0], x[1] * y[0]]
            } else if x[1] == 0.0 {
                [y[0] * x[0], y[1] * x[0]]
            } else {
                return Err(Outcome::error(EXIT_USAGE, "method lemma4 needs x or y of the form (t, 0)"));
            };
            let v =
                hyp0f1_single_integral(kappa.order_mu(), *kappa.kappa2(), scaled, args.nodes).map_err(core_error)?;
            result.value = F17(v);
        }
    }
    Ok(result)
}

pub fn cmd_bessel(args: &BesselArgs, output: OutputFormat) -> Outcome {
    let result = match bessel_result(args) {
        Ok(r) => r,
        Err(outcome) => return outcome,
    };
    let method = match args.method {
        BesselMethod::Series => "series",
        BesselMethod::Theorem3 => "theorem3",
        BesselMethod::Lemma4 => "lemma4",
    };
    let text = match output {
        OutputFormat::Json => {
            let config = BesselConfig {
                kappa: [args.kappa[0].to_string(), args.kappa[1].to_string()],
                x: args.x.map(F17),
                y: args.y.map(F17),
                method: args.method,
                max_degree: args.max_degree,
                nodes: args.nodes,
                seed: args.seed,
            };
            to_json(&Document { command: "bessel", config: &config, result: &result })
        }
        OutputFormat::Csv => {
            let opt = |v: Option<F17>| v.map(|v| fmt_f64(v.0)).unwrap_or_default();
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["method", "value", "truncation", "resolved_order", "selected_error", "rejected_error"])
                .expect("in-memory csv");
            w.write_record([
                method.to_string(),
                fmt_f64(result.value.0),
                opt(result.truncation),
                result.resolved_order.unwrap_or_default().to_string(),
                opt(result.selected_error),
                opt(result.rejected_error),
            ])
            .expect("in-memory csv");
            String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
        }
        OutputFormat::Pretty => {
            let mut s = format!("J = {} ({method})\n", fmt_f64(result.value.0));
            if let Some(t) = result.truncation {
                s += &format!("truncation estimate = {}\n", fmt_f64(t.0));
            }
            if let Some(o) = result.resolved_order {
                s += &format!("resolved order = {o}\n");
            }
            s
        }
    };
    Outcome::ok(EXIT_PASS, text)
}

#[derive(Serialize)]
struct VerifyConfig<'a> {
    identity: Identity,
    #[serde(flatten)]
    sweep: &'a SweepConfig,
}

pub fn sweep_config(args: &VerifyArgs) -> SweepConfig {
    SweepConfig {
        k: args.k.as_ref().map(|l| l.0.clone()),
        kappa: (!args.kappa.is_empty()).then(|| args.kappa.clone()),
        lambda_max: args.lambda_max,
        samples: args.samples,
        tol: args.tol.map(F17),
        seed: args.seed,
        npoints: args.npoints,
        ntheta: args.ntheta,
        max_degree: args.max_degree,
    }
}

pub fn cmd_verify(args: &VerifyArgs, output: OutputFormat) -> Outcome {
    let sweep = sweep_config(args);
    let cases = match run(args.identity, &sweep) {
        Ok(c) => c,
        Err(e @ HarnessError::Config(_)) => return Outcome::error(EXIT_USAGE, e),
        Err(e @ HarnessError::Resolution(_)) => return Outcome::error(EXIT_RESOLUTION, e),
    };
    let summary = Summary::of(&cases);
    let text = match output {
        OutputFormat::Json => {
            let config = VerifyConfig { identity: args.identity, sweep: &sweep };
            to_json(&VerifyDocument { command: "verify", config: &config, cases: &cases, summary })
        }
        OutputFormat::Csv => write_csv(&cases),
        OutputFormat::Pretty => write_pretty(&cases),
    };
    Outcome::ok(if summary.failed == 0 { EXIT_PASS } else { EXIT_FAILED }, text)
}
