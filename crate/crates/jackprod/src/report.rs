//! Per-case verification records and the JSON, CSV and plain-text writers.

use serde::Serialize;

use jackprod_core::report::VerificationReport;

use crate::format::{f17_vec, fmt_f64, F17};

/// One checked instance of an identity. Fields that do not apply to the
/// identity are left empty and omitted from JSON.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Case {
    pub identity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub x: Vec<F17>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub y: Vec<F17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub npoints: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ntheta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monomial: Option<[u32; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method_a: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method_b: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolved_order: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<F17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<F17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_err: Option<F17>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<F17>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub rate_ratios: Vec<F17>,
    pub pass: bool,
}

impl Case {
    pub fn new(identity: &'static str) -> Self {
        Case { identity, ..Case::default() }
    }

    /// Copies lhs, rhs, relative error, tolerance and verdict from a report.
    pub fn with_report(mut self, r: &VerificationReport) -> Self {
        self.lhs = Some(F17(r.lhs));
        self.rhs = Some(F17(r.rhs));
        self.rel_err = Some(F17(r.rel_err));
        self.tol = Some(F17(r.tol));
        self.pass = r.pass;
        self
    }

    pub fn with_points(mut self, x: &[f64], y: &[f64]) -> Self {
        self.x = f17_vec(x);
        self.y = f17_vec(y);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn of(cases: &[Case]) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        Summary { total: cases.len(), passed, failed: cases.len() - passed }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyDocument<'a, C: Serialize> {
    pub command: &'static str,
    pub config: &'a C,
    pub cases: &'a [Case],
    pub summary: Summary,
}

pub const CSV_HEADER: [&str; 21] = [
    "identity",
    "lambda",
    "k",
    "kappa",
    "mu",
    "x",
    "y",
    "npoints",
    "ntheta",
    "max_degree",
    "ell",
    "monomial",
    "method_a",
    "method_b",
    "resolved_order",
    "lhs",
    "rhs",
    "rel_err",
    "tol",
    "rate_ratios",
    "pass",
];

fn join<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(";")
}

fn opt<T>(v: &Option<T>, f: impl Fn(&T) -> String) -> String {
    v.as_ref().map(f).unwrap_or_default()
}

/// The CSV row for a case; list-valued fields are joined with ';'.
pub fn csv_row(c: &Case) -> Vec<String> {
    let num = |v: &F17| fmt_f64(v.0);
    vec![
        c.identity.to_string(),
        opt(&c.lambda, |l| join(l, u32::to_string)),
        opt(&c.k, String::clone),
        opt(&c.kappa, |k| k.join(";")),
        opt(&c.mu, String::clone),
        join(&c.x, num),
        join(&c.y, num),
        opt(&c.npoints, usize::to_string),
        opt(&c.ntheta, usize::to_string),
        opt(&c.max_degree, u32::to_string),
        opt(&c.ell, u32::to_string),
        opt(&c.monomial, |m| format!("{};{}", m[0], m[1])),
        opt(&c.method_a, |s| s.to_string()),
        opt(&c.method_b, |s| s.to_string()),
        opt(&c.resolved_order, |s| s.to_string()),
        opt(&c.lhs, num),
        opt(&c.rhs, num),
        opt(&c.rel_err, num),
        opt(&c.tol, num),
        join(&c.rate_ratios, num),
        c.pass.to_string(),
    ]
}

pub fn write_csv(cases: &[Case]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    // writing into a Vec cannot fail
    w.write_record(CSV_HEADER).expect("in-memory csv");
    for c in cases {
        w.write_record(csv_row(c)).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv output is utf-8")
}

/// One line per case, then the summary.
pub fn write_pretty(cases: &[Case]) -> String {
    let mut out = String::new();
    for c in cases {
        let mut line = format!("[{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.identity);
        if let Some(l) = &c.lambda {
            line += &format!(" lambda=({})", join(l, u32::to_string).replace(';', ","));
        }
        if let Some(k) = &c.k {
            line += &format!(" k={k}");
        }
        if let Some(k) = &c.kappa {
            line += &format!(" kappa=({},{})", k[0], k[1]);
        }
        if let Some(mu) = &c.mu {
            line += &format!(" mu={mu}");
        }
        if !c.x.is_empty() {
            line += &format!(" x=({})", join(&c.x, |v| format!("{:.6}", v.0)).replace(';', ","));
        }
        if !c.y.is_empty() {
            line += &format!(" y=({})", join(&c.y, |v| format!("{:.6}", v.0)).replace(';', ","));
        }
        if let Some(m) = &c.monomial {
            line += &format!(" monomial=x1^{} x2^{}", m[0], m[1]);
        }
        if let Some(o) = c.resolved_order {
            line += &format!(" order={o}");
        }
        if let Some(e) = &c.rel_err {
            line += &format!(" rel_err={:.3e}", e.0);
        }
        if !c.rate_ratios.is_empty() {
            line += &format!(" ratios=({})", join(&c.rate_ratios, |v| format!("{:.4}", v.0)).replace(';', ","));
        }
        out += &line;
        out.push('\n');
    }
    let s = Summary::of(cases);
    out += &format!("total {} passed {} failed {}\n", s.total, s.passed, s.failed);
    out
}
