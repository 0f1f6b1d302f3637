//! Seeded sweeps that check each identity over a family of cases.

use std::fmt;

use serde::Serialize;

use jackprod_core::bessel::{
    bessel_b2_double_integral, bessel_b2_series, bessel_i_norm, bessel_product_identity, bessel_rotation_symmetry,
    hyp0f1_single_integral, hyp0f1_two, limit_transition, resolve_double_integral_order, Multiplicity,
    DEFAULT_BESSEL_NODES, DEFAULT_MAX_DEGREE, MIN_PRODUCT_IDENTITY_NODES,
};
use jackprod_core::dunkl::{check_rotation_intertwining, Poly2};
use jackprod_core::error::Error;
use jackprod_core::partition::{partitions_of_weight, JackParameter, Partition};
use jackprod_core::product::{product_lhs, verify_product, zonal_so2_average};
use jackprod_core::report::VerificationReport;
use jackprod_core::sample::Sampler;
use jackprod_core::scalar::{rational, Rational, Scalar};

use crate::format::{f17_vec, F17};
use crate::report::Case;

/// The identities the harness can sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Product,
    Zonal,
    BesselSeriesVsTheorem3,
    BesselProduct,
    Rotation,
    Lemma4,
    Limit,
    All,
}

impl Identity {
    pub const EACH: [Identity; 7] = [
        Identity::Product,
        Identity::Zonal,
        Identity::BesselSeriesVsTheorem3,
        Identity::Rotation,
        Identity::Lemma4,
        Identity::BesselProduct,
        Identity::Limit,
    ];
}

/// Sweep settings; unset fields fall back to per-identity defaults.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepConfig {
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_rationals")]
    pub k: Option<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_kappas")]
    pub kappa: Option<Vec<[Rational; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<F17>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub npoints: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ntheta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
}

fn ser_rationals<S: serde::Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
    let strings: Option<Vec<String>> = v.as_ref().map(|v| v.iter().map(ToString::to_string).collect());
    strings.serialize(s)
}

fn ser_kappas<S: serde::Serializer>(v: &Option<Vec<[Rational; 2]>>, s: S) -> Result<S::Ok, S::Error> {
    let strings: Option<Vec<[String; 2]>> =
        v.as_ref().map(|v| v.iter().map(|[a, b]| [a.to_string(), b.to_string()]).collect());
    strings.serialize(s)
}

impl SweepConfig {
    pub fn with_seed(seed: u64) -> Self {
        SweepConfig { seed, ..SweepConfig::default() }
    }

    fn tol_or(&self, default: f64) -> f64 {
        self.tol.map_or(default, |t| t.0)
    }

    fn ks_or(&self, default: &[(i64, i64)]) -> Vec<Rational> {
        self.k.clone().unwrap_or_else(|| default.iter().map(|&(n, d)| rational(n, d)).collect())
    }

    fn kappas(&self) -> Vec<[Rational; 2]> {
        self.kappa.clone().unwrap_or_else(default_kappas)
    }
}

pub fn default_kappas() -> Vec<[Rational; 2]> {
    vec![[rational(1, 1), rational(1, 1)], [rational(4, 5), rational(13, 10)], [rational(1, 2), rational(1, 2)]]
}

/// Failures that stop a sweep, as opposed to identities that do not hold.
#[derive(Debug, Clone, PartialEq)]
pub enum HarnessError {
    /// The configuration cannot be evaluated (bad parameter, domain, node count).
    Config(String),
    /// Neither candidate Bessel order matched the series.
    Resolution(String),
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessError::Config(m) => write!(f, "invalid configuration: {m}"),
            HarnessError::Resolution(m) => write!(f, "order resolution failed: {m}"),
        }
    }
}

impl std::error::Error for HarnessError {}

impl From<Error> for HarnessError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResolutionFailure { .. } => HarnessError::Resolution(e.to_string()),
            other => HarnessError::Config(other.to_string()),
        }
    }
}

type Sweep = Result<Vec<Case>, HarnessError>;

pub fn run(identity: Identity, cfg: &SweepConfig) -> Sweep {
    match identity {
        Identity::Product => sweep_product(cfg),
        Identity::Zonal => sweep_zonal(cfg),
        Identity::BesselSeriesVsTheorem3 => sweep_double_integral(cfg),
        Identity::BesselProduct => sweep_bessel_product(cfg),
        Identity::Rotation => sweep_rotation(cfg),
        Identity::Lemma4 => sweep_single_integral(cfg),
        Identity::Limit => sweep_limit(cfg),
        Identity::All => {
            let mut all = Vec::new();
            for id in Identity::EACH {
                all.extend(run(id, cfg)?);
            }
            Ok(all)
        }
    }
}

fn jack_k(k: &Rational) -> Result<JackParameter<f64>, HarnessError> {
    Ok(JackParameter::new(k.to_f64())?)
}

fn two_row_partitions(max_weight: u32) -> Vec<Partition> {
    (0..=max_weight).flat_map(|d| partitions_of_weight(d, 2)).collect()
}

/// `samples` pairs (x, y) with every coordinate in (0, 3].
pub fn product_points(seed: u64, samples: usize) -> Vec<([f64; 2], [f64; 2])> {
    let mut s = Sampler::new(seed);
    (0..samples)
        .map(|_| {
            let x = [s.uniform_open_low(0.0, 3.0), s.uniform_open_low(0.0, 3.0)];
            let y = [s.uniform_open_low(0.0, 3.0), s.uniform_open_low(0.0, 3.0)];
            (x, y)
        })
        .collect()
}

/// Five (x, y) pairs with coordinates in [0, 0.8).
pub fn small_grid(seed: u64) -> Vec<([f64; 2], [f64; 2])> {
    let mut s = Sampler::new(seed);
    (0..5).map(|_| (s.pair(0.0, 0.8), s.pair(0.0, 0.8))).collect()
}

fn sweep_product(cfg: &SweepConfig) -> Sweep {
    let tol = cfg.tol_or(1e-10);
    let points = product_points(cfg.seed, cfg.samples.unwrap_or(50));
    let mut cases = Vec::new();
    for kq in cfg.ks_or(&[(1, 2), (1, 1), (3, 2), (11, 4)]) {
        let k = jack_k(&kq)?;
        for lambda in two_row_partitions(cfg.lambda_max.unwrap_or(8)) {
            let npoints = cfg.npoints.unwrap_or(lambda.weight() as usize + 4);
            for (x, y) in &points {
                let r = verify_product(&lambda, &k, *x, *y, npoints, tol)?;
                let mut c = Case::new("product").with_report(&r).with_points(x, y);
                c.lambda = Some(lambda.parts().to_vec());
                c.k = Some(kq.to_string());
                c.npoints = Some(npoints);
                cases.push(c);
            }
        }
    }
    Ok(cases)
}

fn sweep_zonal(cfg: &SweepConfig) -> Sweep {
    let tol = cfg.tol_or(1e-10);
    let ntheta = cfg.ntheta.unwrap_or(256);
    let points = product_points(cfg.seed, cfg.samples.unwrap_or(10));
    let half = JackParameter::new(0.5)?;
    let mut cases = Vec::new();
    for lambda in two_row_partitions(cfg.lambda_max.unwrap_or(6)) {
        for (x, y) in &points {
            let lhs = product_lhs(&lambda, &half, *x, *y)?;
            let rhs = zonal_so2_average(&lambda, *x, *y, ntheta)?;
            let r = VerificationReport::compare(lhs, rhs, tol);
            let mut c = Case::new("zonal").with_report(&r).with_points(x, y);
            c.lambda = Some(lambda.parts().to_vec());
            c.k = Some("1/2".into());
            c.ntheta = Some(ntheta);
            cases.push(c);
        }
    }
    Ok(cases)
}

fn multiplicity(kappa: &[Rational; 2]) -> Result<Multiplicity<f64>, HarnessError> {
    Ok(Multiplicity::new(kappa[0].to_f64(), kappa[1].to_f64())?)
}

fn kappa_strings(kappa: &[Rational; 2]) -> [String; 2] {
    [kappa[0].to_string(), kappa[1].to_string()]
}

fn sweep_double_integral(cfg: &SweepConfig) -> Sweep {
    let tol = cfg.tol_or(1e-7);
    let nodes = cfg.npoints.unwrap_or(DEFAULT_BESSEL_NODES);
    let max_degree = cfg.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
    let grid = small_grid(cfg.seed);
    let mut cases = Vec::new();
    let mut orders = Vec::new();
    for kq in cfg.kappas() {
        let kappa = multiplicity(&kq)?;
        let resolution = resolve_double_integral_order(&kappa, cfg.seed)?;
        orders.push(resolution.order);
        for (x, y) in &grid {
            let lhs = bessel_b2_series(&kappa, *x, *y, max_degree)?.value;
            let rhs = bessel_b2_double_integral(&kappa, *x, *y, nodes, nodes, resolution.order)?;
            let r = VerificationReport::compare(lhs, rhs, tol);
            let mut c = Case::new("bessel-series-vs-theorem3").with_report(&r).with_points(x, y);
            c.kappa = Some(kappa_strings(&kq));
            c.npoints = Some(nodes);
            c.max_degree = Some(max_degree);
            c.method_a = Some("series");
            c.method_b = Some("theorem3");
            c.resolved_order = Some(resolution.order.label());
            cases.push(c);
        }
    }
    let mut consistency = Case::new("double-integral-order-consistency");
    consistency.pass = orders.windows(2).all(|w| w[0] == w[1]);
    consistency.resolved_order = orders.first().map(|o| o.label());
    cases.push(consistency);
    Ok(cases)
}

fn sweep_rotation(cfg: &SweepConfig) -> Sweep {
    let tol = cfg.tol_or(1e-8);
    let max_degree = cfg.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
    let grid = small_grid(cfg.seed);
    let mut cases = Vec::new();
    for kq in cfg.kappas() {
        let kappa = multiplicity(&kq)?;
        for (x, y) in &grid {
            let r = bessel_rotation_symmetry(&kappa, *x, *y, max_degree, tol)?;
            let mut c = Case::new("rotation").with_report(&r).with_points(x, y);
            c.kappa = Some(kappa_strings(&kq));
            c.max_degree = Some(max_degree);
            c.method_a = Some("series");
            c.method_b = Some("series-rotated");
            cases.push(c);
        }
        let exact = Multiplicity::new(kq[0].clone(), kq[1].clone())?;
        for d in 0..=6u32 {
            for i in 0..=d {
                let p = Poly2::monomial(i, d - i, rational(1, 1));
                let mut c = Case::new("intertwining");
                c.kappa = Some(kappa_strings(&kq));
                c.monomial = Some([i, d - i]);
                c.pass = check_rotation_intertwining(&p, &exact)?.holds();
                cases.push(c);
            }
        }
    }
    Ok(cases)
}

fn sweep_single_integral(cfg: &SweepConfig) -> Sweep {
    let tol = cfg.tol_or(1e-9);
    let nodes = cfg.npoints.unwrap_or(DEFAULT_BESSEL_NODES);
    let max_degree = cfg.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
    let grid = [0.0, 0.25, 0.5, 0.75, 1.0];
    let mut cases = Vec::new();
    for mu in [rational(1, 1), rational(3, 2), rational(12, 5)] {
        for kq in cfg.ks_or(&[(1, 2), (1, 1), (2, 1)]) {
            let k = jack_k(&kq)?;
            for &x1 in &grid {
                for &x2 in &grid {
                    let x = [x1, x2];
                    let lhs = hyp0f1_two(mu.to_f64(), &k, x, [1.0, 0.0], max_degree)?.value;
                    let rhs = hyp0f1_single_integral(mu.to_f64(), kq.to_f64(), x, nodes)?;
                    let r = VerificationReport::compare(lhs, rhs, tol);
                    let mut c = Case::new("lemma4").with_report(&r).with_points(&x, &[1.0, 0.0]);
                    c.mu = Some(mu.to_string());
                    c.k = Some(kq.to_string());
                    c.npoints = Some(nodes);
                    c.max_degree = Some(max_degree);
                    c.method_a = Some("series");
                    c.method_b = Some("lemma4");
                    cases.push(c);
                }
            }
        }
    }
    Ok(cases)
}

fn sweep_bessel_product(cfg: &SweepConfig) -> Sweep {
    let tol = cfg.tol_or(1e-10);
    let nodes = cfg.npoints.unwrap_or(MIN_PRODUCT_IDENTITY_NODES);
    let values = [0.0, 0.5, 1.0, 2.0, 5.0];
    let mut cases = Vec::new();
    for kq in cfg.ks_or(&[(1, 2), (1, 1), (3, 2)]) {
        for &x in &values {
            for &y in &values {
                let r = bessel_product_identity(kq.to_f64(), x, y, nodes, tol)?;
                let mut c = Case::new("bessel-product").with_report(&r).with_points(&[x], &[y]);
                c.k = Some(kq.to_string());
                c.npoints = Some(nodes);
                cases.push(c);
            }
        }
    }
    Ok(cases)
}

/// ℓ values of the limit ladder; each doubles the previous.
pub const LIMIT_LADDER: [u32; 4] = [8, 16, 32, 64];
/// Accepted band for err(2ℓ)/err(ℓ) under first-order convergence.
pub const LIMIT_RATE_BAND: (f64, f64) = (0.35, 0.65);

/// Errors |limit_transition(k, x, ℓ) − 𝓘_{k−½}(x)| along [`LIMIT_LADDER`]
/// and their successive ratios.
pub fn limit_errors(k: f64, x: f64) -> Result<(f64, [f64; 4], [f64; 3]), HarnessError> {
    let jk = JackParameter::new(k)?;
    let target = bessel_i_norm(k - 0.5, x)?;
    let mut errors = [0.0; 4];
    for (e, &ell) in errors.iter_mut().zip(&LIMIT_LADDER) {
        *e = (limit_transition(&jk, x, ell)? - target).abs();
    }
    let ratios = [errors[1] / errors[0], errors[2] / errors[1], errors[3] / errors[2]];
    Ok((target, errors, ratios))
}

fn sweep_limit(cfg: &SweepConfig) -> Sweep {
    let mut cases = Vec::new();
    for kq in cfg.ks_or(&[(1, 2), (1, 1)]) {
        for x in [0.5, 1.0] {
            let (target, errors, ratios) = limit_errors(kq.to_f64(), x)?;
            let last = *LIMIT_LADDER.last().unwrap_or(&64);
            let value = limit_transition(&jack_k(&kq)?, x, last)?;
            let mut c = Case::new("limit").with_points(&[x], &[]);
            c.k = Some(kq.to_string());
            c.ell = Some(last);
            c.lhs = Some(F17(value));
            c.rhs = Some(F17(target));
            c.rel_err = Some(F17(((value - target) / target).abs()));
            c.rate_ratios = f17_vec(&ratios);
            let decreasing = errors.windows(2).all(|w| w[1] < w[0]);
            let in_band = ratios.iter().all(|r| (LIMIT_RATE_BAND.0..=LIMIT_RATE_BAND.1).contains(r));
            c.pass = decreasing && in_band;
            cases.push(c);
        }
    }
    Ok(cases)
}
