//! Acceptance suite: each criterion runs at its stated tolerance and prints
//! one PASS/FAIL line. The process exits nonzero if any criterion fails.

use std::process::ExitCode;

use jackprod_core::bessel::{
    bessel_b2_double_integral, bessel_b2_series, bessel_i_norm, bessel_product_identity, bessel_rotation_symmetry,
    hyp0f1_single_integral, hyp0f1_two, limit_transition, resolve_double_integral_order, Multiplicity,
};
use jackprod_core::dunkl::{check_rotation_intertwining, Poly2};
use jackprod_core::jack::{jack_c, jack_p, jack_p_two_var, jack_recursion_lift, DEFAULT_LIFT_NODES};
use jackprod_core::partition::{eigenvalue_e, partitions_of_weight, JackParameter, Partition};
use jackprod_core::product::{product_lhs, verify_product, zonal_so2_average};
use jackprod_core::quadrature::{even_moment, gauss_jacobi_rule};
use jackprod_core::sample::{Sampler, DEFAULT_SEED};
use jackprod_core::scalar::{rational, Rational, Scalar};
use jackprod_core::sympoly::apply_lb_operator;

struct Outcome {
    pass: bool,
    detail: String,
}

fn rel(a: f64, b: f64) -> f64 {
    let scale = a.abs();
    if scale < 1e-300 {
        (a - b).abs()
    } else {
        (a - b).abs() / scale
    }
}

fn two_row(max_weight: u32) -> Vec<Partition> {
    (0..=max_weight).flat_map(|d| partitions_of_weight(d, 2)).collect()
}

fn rationals(pairs: &[(i64, i64)]) -> Vec<Rational> {
    pairs.iter().map(|&(n, d)| rational(n, d)).collect()
}

/// Worst relative error over a sweep, with the verdict against `tol`.
struct Worst {
    err: f64,
    count: usize,
    tol: f64,
}

impl Worst {
    fn new(tol: f64) -> Self {
        Worst { err: 0.0, count: 0, tol }
    }

    fn add(&mut self, err: f64) {
        self.count += 1;
        self.err = if err.is_nan() { f64::INFINITY } else { self.err.max(err) };
    }

    fn outcome(self, extra: &str) -> Outcome {
        Outcome {
            pass: self.err <= self.tol,
            detail: format!("{} cases, worst rel err {:.2e} (tol {:.0e}){extra}", self.count, self.err, self.tol),
        }
    }
}

fn product_formula() -> Outcome {
    let mut s = Sampler::new(DEFAULT_SEED);
    let points: Vec<([f64; 2], [f64; 2])> = (0..50)
        .map(|_| {
            let x = [s.uniform_open_low(0.0, 3.0), s.uniform_open_low(0.0, 3.0)];
            let y = [s.uniform_open_low(0.0, 3.0), s.uniform_open_low(0.0, 3.0)];
            (x, y)
        })
        .collect();
    let mut worst = Worst::new(1e-10);
    for k in [0.5, 1.0, 1.5, 2.75] {
        let k = JackParameter::new(k).unwrap();
        for lambda in two_row(8) {
            let npoints = lambda.weight() as usize + 4;
            for (x, y) in &points {
                let r = verify_product(&lambda, &k, *x, *y, npoints, 1e-10).unwrap();
                worst.add(r.rel_err);
            }
        }
    }
    worst.outcome("")
}

fn eigenfunction() -> Outcome {
    let mut checked = 0;
    let mut failures = 0;
    for k in rationals(&[(1, 2), (1, 1), (3, 2), (7, 3)]) {
        let k = JackParameter::new(k).unwrap();
        for n in 2..=3 {
            for d in 0..=8 {
                for lambda in partitions_of_weight(d, n) {
                    let p = jack_p(&lambda, &k, n).unwrap();
                    let image = apply_lb_operator(p.expansion(), &k).unwrap();
                    let e = eigenvalue_e(&lambda, &k, n).unwrap();
                    checked += 1;
                    if image != p.expansion().scale(&e) {
                        failures += 1;
                    }
                }
            }
        }
    }
    Outcome { pass: failures == 0, detail: format!("{checked} polynomials, {failures} exact mismatches") }
}

fn closed_form() -> Outcome {
    let points =
        [(rational(5, 3), rational(-2, 7)), (rational(3, 2), rational(1, 5)), (rational(7, 1), rational(2, 1))];
    let mut checked = 0;
    let mut failures = 0;
    for k in rationals(&[(1, 2), (1, 1), (3, 2), (7, 3)]) {
        let k = JackParameter::new(k).unwrap();
        for lambda in two_row(8) {
            let p = jack_p(&lambda, &k, 2).unwrap();
            for (a, b) in &points {
                checked += 1;
                if jack_p_two_var(&lambda, &k, a, b).unwrap() != p.eval(&[a.clone(), b.clone()]).unwrap() {
                    failures += 1;
                }
            }
        }
    }
    Outcome { pass: failures == 0, detail: format!("{checked} evaluations, {failures} exact mismatches") }
}

fn c_normalization() -> Outcome {
    let xs = [vec![rational(3, 2), rational(-1, 5)], vec![rational(2, 7), rational(5, 3), rational(-4, 9)]];
    let mut checked = 0;
    let mut failures = 0;
    for k in rationals(&[(1, 2), (1, 1), (2, 3), (7, 3)]) {
        let k = JackParameter::new(k).unwrap();
        for x in &xs {
            let n = x.len();
            let total: Rational = x.iter().cloned().sum();
            for d in 0..=6 {
                let mut sum = rational(0, 1);
                for lambda in partitions_of_weight(d, n) {
                    sum += jack_c(&lambda, &k, n, x).unwrap();
                }
                checked += 1;
                if sum != total.powu(d) {
                    failures += 1;
                }
            }
        }
    }
    Outcome { pass: failures == 0, detail: format!("{checked} degree sums, {failures} exact mismatches") }
}

fn recursion_lift() -> Outcome {
    let mut s = Sampler::new(DEFAULT_SEED);
    let mut points = Vec::new();
    while points.len() < 10 {
        let mut x = [s.uniform_open_low(0.0, 3.0), s.uniform_open_low(0.0, 3.0), s.uniform_open_low(0.0, 3.0)];
        x.sort_by(f64::total_cmp);
        if x[0] < x[1] && x[1] < x[2] && x[2] < 3.0 {
            points.push(x);
        }
    }
    let mut worst = Worst::new(1e-8);
    for k in rationals(&[(1, 2), (1, 1), (2, 1)]) {
        let kf = JackParameter::new(k.to_f64()).unwrap();
        let kq = JackParameter::new(k).unwrap();
        for lambda in two_row(6) {
            let exact = jack_p(&lambda, &kq, 3).unwrap();
            for x in &points {
                let want = exact.eval_f64(x).unwrap();
                let got = jack_recursion_lift(&lambda, &kf, x, DEFAULT_LIFT_NODES).unwrap();
                worst.add(rel(want, got));
            }
        }
    }
    worst.outcome("")
}

fn zonal() -> Outcome {
    let mut s = Sampler::new(DEFAULT_SEED);
    let half = JackParameter::new(0.5).unwrap();
    let mut worst = Worst::new(1e-10);
    for _ in 0..10 {
        let x = [s.uniform_open_low(0.0, 3.0), s.uniform_open_low(0.0, 3.0)];
        let y = [s.uniform_open_low(0.0, 3.0), s.uniform_open_low(0.0, 3.0)];
        for lambda in two_row(6) {
            let lhs = product_lhs(&lambda, &half, x, y).unwrap();
            worst.add(rel(lhs, zonal_so2_average(&lambda, x, y, 256).unwrap()));
        }
    }
    worst.outcome("")
}

fn quadrature() -> Outcome {
    let mut worst = Worst::new(1e-13);
    for k in [0.3, 0.5, 1.0, 2.75] {
        for n in 1..=64usize {
            let rule = gauss_jacobi_rule(n, k).unwrap();
            for j in 0..n as u32 {
                let got = rule.integrate(|u| u.powi(2 * j as i32));
                worst.add(rel(even_moment(j, k), got));
            }
        }
    }
    worst.outcome("")
}

fn single_integral() -> Outcome {
    let grid = [0.0, 0.25, 0.5, 0.75, 1.0];
    let mut worst = Worst::new(1e-9);
    for mu in [1.0, 1.5, 2.4] {
        for k in [0.5, 1.0, 2.0] {
            let jk = JackParameter::new(k).unwrap();
            for &a in &grid {
                for &b in &grid {
                    let series = hyp0f1_two(mu, &jk, [a, b], [1.0, 0.0], 40).unwrap().value;
                    worst.add(rel(series, hyp0f1_single_integral(mu, k, [a, b], 64).unwrap()));
                }
            }
        }
    }
    worst.outcome("")
}

fn kappas() -> [(Rational, Rational); 3] {
    [(rational(1, 1), rational(1, 1)), (rational(4, 5), rational(13, 10)), (rational(1, 2), rational(1, 2))]
}

fn small_grid() -> Vec<([f64; 2], [f64; 2])> {
    let mut s = Sampler::new(DEFAULT_SEED);
    (0..5).map(|_| (s.pair(0.0, 0.8), s.pair(0.0, 0.8))).collect()
}

fn double_integral() -> Outcome {
    let mut worst = Worst::new(1e-7);
    let mut orders = Vec::new();
    for (k1, k2) in kappas() {
        let kappa = Multiplicity::new(k1.to_f64(), k2.to_f64()).unwrap();
        let resolution = match resolve_double_integral_order(&kappa, DEFAULT_SEED) {
            Ok(r) => r,
            Err(e) => return Outcome { pass: false, detail: format!("resolution failed: {e}") },
        };
        orders.push(resolution.order);
        for (x, y) in small_grid() {
            let series = bessel_b2_series(&kappa, x, y, 40).unwrap().value;
            let t3 = bessel_b2_double_integral(&kappa, x, y, 64, 64, resolution.order).unwrap();
            worst.add(rel(series, t3));
        }
    }
    let same = orders.windows(2).all(|w| w[0] == w[1]);
    let mut out = worst.outcome(&format!(", selected order {} for all kappa: {same}", orders[0]));
    out.pass &= same;
    out
}

fn rotation() -> Outcome {
    let mut worst = Worst::new(1e-8);
    let mut intertwining_failures = 0;
    let mut monomials = 0;
    for (k1, k2) in kappas() {
        let kappa = Multiplicity::new(k1.to_f64(), k2.to_f64()).unwrap();
        for (x, y) in small_grid() {
            worst.add(bessel_rotation_symmetry(&kappa, x, y, 40, 1e-8).unwrap().rel_err);
        }
        let exact = Multiplicity::new(k1, k2).unwrap();
        for d in 0..=6u32 {
            for i in 0..=d {
                monomials += 1;
                let p = Poly2::monomial(i, d - i, rational(1, 1));
                if !check_rotation_intertwining(&p, &exact).unwrap().holds() {
                    intertwining_failures += 1;
                }
            }
        }
    }
    let mut out = worst.outcome(&format!(", intertwining {monomials} monomials, {intertwining_failures} failures"));
    out.pass &= intertwining_failures == 0;
    out
}

fn classical_product() -> Outcome {
    let values = [0.0, 0.5, 1.0, 2.0, 5.0];
    let mut worst = Worst::new(1e-10);
    let mut worst_y0 = 0.0f64;
    for k in [0.5, 1.0, 1.5] {
        for &x in &values {
            for &y in &values {
                let r = bessel_product_identity(k, x, y, 64, 1e-10).unwrap();
                worst.add(r.rel_err);
                if y == 0.0 {
                    worst_y0 = worst_y0.max(r.rel_err);
                }
            }
        }
    }
    let rounding = 8.0 * f64::EPSILON;
    let mut out = worst.outcome(&format!(", y=0 worst {worst_y0:.2e} (rounding bound {rounding:.1e})"));
    out.pass &= worst_y0 <= rounding;
    out
}

fn limit() -> Outcome {
    let mut all_ok = true;
    let mut ratios_seen = Vec::new();
    for k in [0.5, 1.0] {
        let jk = JackParameter::new(k).unwrap();
        for x in [0.5, 1.0] {
            let target = bessel_i_norm(k - 0.5, x).unwrap();
            let errs: Vec<f64> =
                [8, 16, 32, 64].iter().map(|&l| (limit_transition(&jk, x, l).unwrap() - target).abs()).collect();
            for w in errs.windows(2) {
                let ratio = w[1] / w[0];
                ratios_seen.push(ratio);
                all_ok &= w[1] < w[0] && (0.35..=0.65).contains(&ratio);
            }
        }
    }
    let lo = ratios_seen.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = ratios_seen.iter().copied().fold(0.0, f64::max);
    Outcome { pass: all_ok, detail: format!("error ratios per doubling in [{lo:.4}, {hi:.4}] (band [0.35, 0.65])") }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("product formula, seeded sweep", product_formula),
        ("exact eigenfunction property", eigenfunction),
        ("two-variable closed form equals solver", closed_form),
        ("C-normalization sums to power of first power sum", c_normalization),
        ("three-variable interlacing lift", recursion_lift),
        ("zonal SO(2) average", zonal),
        ("Gauss-Jacobi even-moment exactness", quadrature),
        ("single-integral 0F1 representation", single_integral),
        ("double-integral B2 Bessel (resolved order)", double_integral),
        ("rotation symmetry and Dunkl intertwining", rotation),
        ("classical Bessel product formula", classical_product),
        ("limit transition to the Bessel function", limit),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let out = check();
        if !out.pass {
            failed += 1;
        }
        println!("criterion {:>2} [{}] {name}: {}", i + 1, if out.pass { "PASS" } else { "FAIL" }, out.detail);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
