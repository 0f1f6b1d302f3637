//! Normalized modified Bessel functions and the type B₂ Bessel function
//! J^κ(x, y) = ₀F₁(μ; κ₂; x²/2, y²/2), μ = κ₁ + κ₂ + ½, evaluated as a Jack
//! series, as a single integral over one Bessel function, and as a double
//! integral.

use core::fmt;

use crate::error::{Error, Result};
use crate::jack::jack_p_two_var;
use crate::partition::{gen_pochhammer, hook_product_h, partitions_of_weight, JackParameter, Partition};
use crate::quadrature::{gauss_jacobi_rule, normalization_c};
use crate::report::VerificationReport;
use crate::sample::Sampler;
use crate::scalar::Scalar;
use crate::special::Neumaier;

/// Default truncation degree for the Jack series.
pub const DEFAULT_MAX_DEGREE: u32 = 40;
/// Default node count per axis for the integral representations.
pub const DEFAULT_BESSEL_NODES: usize = 64;
/// The classical product identity is evaluated with at least this many nodes.
pub const MIN_PRODUCT_IDENTITY_NODES: usize = 64;

/// Multiplicity κ = (κ₁, κ₂) on the short and long roots of B₂.
#[derive(Clone, Debug, PartialEq)]
pub struct Multiplicity<T> {
    kappa1: T,
    kappa2: T,
}

impl<T: Scalar> Multiplicity<T> {
    pub fn new(kappa1: T, kappa2: T) -> Result<Self> {
        if kappa1.is_positive() && kappa2.is_positive() {
            Ok(Multiplicity { kappa1, kappa2 })
        } else {
            Err(Error::NonPositiveParameter)
        }
    }

    pub fn kappa1(&self) -> &T {
        &self.kappa1
    }

    pub fn kappa2(&self) -> &T {
        &self.kappa2
    }

    /// μ = κ₁ + κ₂ + ½.
    pub fn order_mu(&self) -> T {
        self.kappa1.clone() + self.kappa2.clone() + T::ratio(1, 2)
    }

    /// κ′ = (κ₂, κ₁).
    pub fn swapped(&self) -> Self {
        Multiplicity { kappa1: self.kappa2.clone(), kappa2: self.kappa1.clone() }
    }
}

fn check_order(nu: f64) -> Result<()> {
    if nu > -1.0 && nu.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("Bessel order must exceed -1"))
    }
}

/// 𝓘_ν(t) = Γ(ν+1)(t/2)^{−ν} I_ν(t) = Σ_m (t²/4)^m / (m! (ν+1)_m).
pub fn bessel_i_norm(nu: f64, t: f64) -> Result<f64> {
    check_order(nu)?;
    let q = 0.25 * t * t;
    let mut acc = Neumaier::default();
    let mut term = 1.0;
    acc.add(term);
    let mut m = 0.0;
    loop {
        m += 1.0;
        term *= q / (m * (nu + m));
        acc.add(term);
        if m > q && term <= 1e-17 * acc.sum() {
            break;
        }
        if m > 1e5 {
            return Err(Error::Domain("Bessel series failed to converge"));
        }
    }
    Ok(acc.sum())
}

/// (𝓘_ν(t), 𝓘_ν′(t), 𝓘_ν″(t)) from the term-wise differentiated series.
pub fn bessel_i_norm_derivatives(nu: f64, t: f64) -> Result<(f64, f64, f64)> {
    check_order(nu)?;
    let f = bessel_i_norm(nu, t)?;
    let t2 = t * t;
    // a_m = t^{2m−2} / (4^m m! (ν+1)_m)
    let mut a = 0.25 / (nu + 1.0);
    let (mut d1, mut d2) = (Neumaier::default(), Neumaier::default());
    let mut m = 1.0;
    loop {
        d1.add(2.0 * m * a * t);
        d2.add(2.0 * m * (2.0 * m - 1.0) * a);
        if m > 0.25 * t2 + 1.0 && 2.0 * m * (2.0 * m - 1.0) * a <= 1e-17 * d2.sum().abs() {
            break;
        }
        if m > 1e5 {
            return Err(Error::Domain("Bessel series failed to converge"));
        }
        m += 1.0;
        a *= t2 / (4.0 * m * (nu + m));
    }
    Ok((f, d1.sum(), d2.sum()))
}

/// A truncated series value with the size of its last included degree.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub truncation: f64,
}

/// ₀F₁(μ; k; x, y) = Σ_λ P_λ(x)P_λ(y) / ([μ]_λ h_k(λ) P_λ(1,1)) over
/// partitions with at most two parts and |λ| ≤ `max_degree`.
///
/// Terms whose numerator vanishes exactly are skipped before the Pochhammer
/// is inspected, so a pole only raises an error when it actually multiplies
/// something nonzero.
pub fn hyp0f1_two(
    mu_order: f64,
    k: &JackParameter<f64>,
    x: [f64; 2],
    y: [f64; 2],
    max_degree: u32,
) -> Result<SeriesValue> {
    let mut acc = Neumaier::default();
    let mut truncation = 0.0;
    for d in 0..=max_degree {
        let mut degree_sum = Neumaier::default();
        for lambda in partitions_of_weight(d, 2) {
            let numer = jack_p_two_var(&lambda, k, &x[0], &x[1])? * jack_p_two_var(&lambda, k, &y[0], &y[1])?;
            if numer == 0.0 {
                continue;
            }
            let poch = gen_pochhammer(&mu_order, &lambda, k, 2)?;
            if poch == 0.0 {
                return Err(Error::PochhammerPole);
            }
            let ones = jack_p_two_var(&lambda, k, &1.0, &1.0)?;
            degree_sum.add(numer / (poch * hook_product_h(&lambda, k) * ones));
        }
        let contribution = degree_sum.sum();
        acc.add(contribution);
        truncation = contribution.abs();
    }
    Ok(SeriesValue { value: acc.sum(), truncation })
}

fn halved_squares(v: [f64; 2]) -> [f64; 2] {
    [0.5 * v[0] * v[0], 0.5 * v[1] * v[1]]
}

/// J^κ(x, y) from the Jack series with arguments x²/2, y²/2 and k = κ₂.
pub fn bessel_b2_series(kappa: &Multiplicity<f64>, x: [f64; 2], y: [f64; 2], max_degree: u32) -> Result<SeriesValue> {
    let k = JackParameter::new(*kappa.kappa2())?;
    hyp0f1_two(kappa.order_mu(), &k, halved_squares(x), halved_squares(y), max_degree)
}

fn check_nonnegative(v: [f64; 2], what: &'static str) -> Result<()> {
    if v.iter().all(|c| c.is_finite() && *c >= 0.0) {
        Ok(())
    } else {
        Err(Error::Domain(what))
    }
}

/// ₀F₁(μ; k; x, (1,0)) as c_k ∫₋₁¹ 𝓘_{μ−1}(√(2(x₁+x₂+v(x₁−x₂)))) (1−v²)^{k−1} dv.
pub fn hyp0f1_single_integral(mu_order: f64, k: f64, x: [f64; 2], npoints: usize) -> Result<f64> {
    check_nonnegative(x, "x must be componentwise nonnegative")?;
    let rule = gauss_jacobi_rule(npoints, k)?;
    let integral = rule.try_integrate(|v| {
        let arg = 2.0 * (x[0] + x[1] + v * (x[0] - x[1]));
        bessel_i_norm(mu_order - 1.0, libm::sqrt(arg.max(0.0)))
    })?;
    Ok(normalization_c(k) * integral)
}

/// Candidate Bessel orders for the double-integral representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoubleIntegralOrder {
    MuMinusOne,
    Mu,
}

impl DoubleIntegralOrder {
    pub const CANDIDATES: [DoubleIntegralOrder; 2] = [DoubleIntegralOrder::MuMinusOne, DoubleIntegralOrder::Mu];

    pub fn order(self, kappa: &Multiplicity<f64>) -> f64 {
        match self {
            DoubleIntegralOrder::MuMinusOne => kappa.order_mu() - 1.0,
            DoubleIntegralOrder::Mu => kappa.order_mu(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            DoubleIntegralOrder::MuMinusOne => "mu-1",
            DoubleIntegralOrder::Mu => "mu",
        }
    }
}

impl fmt::Display for DoubleIntegralOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Z(u, v) = (x₁²+x₂²)(y₁²+y₂²) + u(x₁²−x₂²)(y₁²−y₂²) + 4v x₁x₂y₁y₂.
pub fn double_integral_z(x: [f64; 2], y: [f64; 2], u: f64, v: f64) -> f64 {
    let (a1, a2) = (x[0] * x[0], x[1] * x[1]);
    let (b1, b2) = (y[0] * y[0], y[1] * y[1]);
    (a1 + a2) * (b1 + b2) + u * (a1 - a2) * (b1 - b2) + 4.0 * v * x[0] * x[1] * y[0] * y[1]
}

/// J^κ(x, y) as c_{κ₁}c_{κ₂} ∬ 𝓘_ν(√(Z/2)) (1−u²)^{κ₂−1}(1−v²)^{κ₁−1} du dv
/// with ν selected by `order`.
pub fn bessel_b2_double_integral(
    kappa: &Multiplicity<f64>,
    x: [f64; 2],
    y: [f64; 2],
    npoints_u: usize,
    npoints_v: usize,
    order: DoubleIntegralOrder,
) -> Result<f64> {
    check_nonnegative(x, "x must be componentwise nonnegative")?;
    check_nonnegative(y, "y must be componentwise nonnegative")?;
    let nu = order.order(kappa);
    let rule_u = gauss_jacobi_rule(npoints_u, *kappa.kappa2())?;
    let rule_v = gauss_jacobi_rule(npoints_v, *kappa.kappa1())?;
    let scale = double_integral_z(x, y, 1.0, 1.0).abs();
    let mut acc = Neumaier::default();
    for (&u, &wu) in rule_u.nodes().iter().zip(rule_u.weights()) {
        let mut inner = Neumaier::default();
        for (&v, &wv) in rule_v.nodes().iter().zip(rule_v.weights()) {
            let mut z = double_integral_z(x, y, u, v);
            if z < 0.0 {
                if z < -1e-14 * scale {
                    return Err(Error::NegativeDiscriminant(z));
                }
                z = 0.0;
            }
            inner.add(wv * bessel_i_norm(nu, libm::sqrt(0.5 * z))?);
        }
        acc.add(wu * inner.sum());
    }
    Ok(normalization_c(*kappa.kappa1()) * normalization_c(*kappa.kappa2()) * acc.sum())
}

/// Outcome of adjudicating the Bessel order against the series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DoubleIntegralResolution {
    pub order: DoubleIntegralOrder,
    /// Largest relative deviation from the series for the selected order.
    pub selected_error: f64,
    /// The same for the rejected order.
    pub rejected_error: f64,
}

/// Points used for the order adjudication: 5 seeded (x, y) pairs with
/// components in [0.3, 0.8), away from the origin where both orders agree.
pub fn resolution_points(seed: u64) -> [([f64; 2], [f64; 2]); 5] {
    let mut s = Sampler::new(seed);
    core::array::from_fn(|_| (s.pair(0.3, 0.8), s.pair(0.3, 0.8)))
}

/// Compares both candidate orders with the series at [`resolution_points`]
/// and keeps the one with the smaller worst-case relative deviation.
pub fn resolve_double_integral_order(kappa: &Multiplicity<f64>, seed: u64) -> Result<DoubleIntegralResolution> {
    let points = resolution_points(seed);
    let mut errors = [0.0f64; 2];
    for (x, y) in points {
        let series = bessel_b2_series(kappa, x, y, DEFAULT_MAX_DEGREE)?.value;
        for (slot, order) in DoubleIntegralOrder::CANDIDATES.iter().enumerate() {
            let value = bessel_b2_double_integral(kappa, x, y, DEFAULT_BESSEL_NODES, DEFAULT_BESSEL_NODES, *order)?;
            let rel = ((value - series) / series).abs();
            errors[slot] = errors[slot].max(if rel.is_nan() { f64::INFINITY } else { rel });
        }
    }
    let best = if errors[0] <= errors[1] { 0 } else { 1 };
    if errors[best] > 1e-5 {
        return Err(Error::ResolutionFailure { best_error: errors[best] });
    }
    Ok(DoubleIntegralResolution {
        order: DoubleIntegralOrder::CANDIDATES[best],
        selected_error: errors[best],
        rejected_error: errors[1 - best],
    })
}

/// r·x with r = (1/√2)[[1, 1], [−1, 1]].
pub fn rotate_pair(x: [f64; 2]) -> [f64; 2] {
    let s = core::f64::consts::FRAC_1_SQRT_2;
    [s * (x[0] + x[1]), s * (x[1] - x[0])]
}

/// J^κ(x, y) against J^{κ′}(r·x, r·y).
pub fn bessel_rotation_symmetry(
    kappa: &Multiplicity<f64>,
    x: [f64; 2],
    y: [f64; 2],
    max_degree: u32,
    tol: f64,
) -> Result<VerificationReport> {
    let lhs = bessel_b2_series(kappa, x, y, max_degree)?.value;
    let rhs = bessel_b2_series(&kappa.swapped(), rotate_pair(x), rotate_pair(y), max_degree)?.value;
    Ok(VerificationReport::compare(lhs, rhs, tol))
}

/// 𝓘_{k−½}(x)𝓘_{k−½}(y) against c_k ∫ 𝓘_{k−½}(√(x²+y²+2uxy))(1−u²)^{k−1} du.
pub fn bessel_product_identity(k: f64, x: f64, y: f64, npoints: usize, tol: f64) -> Result<VerificationReport> {
    if !(k > 0.0) {
        return Err(Error::NonPositiveParameter);
    }
    if npoints < MIN_PRODUCT_IDENTITY_NODES {
        return Err(Error::TooFewNodes { needed: MIN_PRODUCT_IDENTITY_NODES, found: npoints });
    }
    let nu = k - 0.5;
    let lhs = bessel_i_norm(nu, x)? * bessel_i_norm(nu, y)?;
    let rule = gauss_jacobi_rule(npoints, k)?;
    let integral = rule.try_integrate(|u| {
        let r2 = x * x + y * y + 2.0 * u * x * y;
        bessel_i_norm(nu, libm::sqrt(r2.max(0.0)))
    })?;
    let rhs = normalization_c(k) * integral;
    Ok(VerificationReport::compare(lhs, rhs, tol))
}

/// P_{(2ℓ,ℓ)}(1 + x/ℓ, 1 − x/ℓ) / P_{(2ℓ,ℓ)}(1, 1), which tends to 𝓘_{k−½}(x).
pub fn limit_transition(k: &JackParameter<f64>, x: f64, ell: u32) -> Result<f64> {
    let l = f64::from(ell);
    if ell == 0 || !(x.abs() < l) {
        return Err(Error::Domain("ell must be positive and exceed |x|"));
    }
    let lambda = Partition::new([2 * ell, ell])?;
    let num = jack_p_two_var(&lambda, k, &(1.0 + x / l), &(1.0 - x / l))?;
    let den = jack_p_two_var(&lambda, k, &1.0, &1.0)?;
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
    }

    fn kp(k: f64) -> JackParameter<f64> {
        JackParameter::new(k).unwrap()
    }

    fn kappa(a: f64, b: f64) -> Multiplicity<f64> {
        Multiplicity::new(a, b).unwrap()
    }

    #[test]
    fn multiplicity_basics() {
        let k = kappa(0.8, 1.3);
        assert!(close(k.order_mu(), 2.6, 1e-15));
        assert_eq!(k.swapped(), kappa(1.3, 0.8));
        assert!(Multiplicity::new(0.0, 1.0).is_err());
    }

    #[test]
    fn bessel_half_integer_orders() {
        assert_eq!(bessel_i_norm(0.3, 0.0).unwrap(), 1.0);
        for t in [0.1, 1.0, 5.0] {
            assert!(close(bessel_i_norm(0.5, t).unwrap(), libm::sinh(t) / t, 1e-15));
            assert!(close(bessel_i_norm(-0.5, t).unwrap(), libm::cosh(t), 1e-15));
        }
        assert!(bessel_i_norm(-1.0, 1.0).is_err());
    }

    #[test]
    fn bessel_ode_residual() {
        for nu in [-0.5, 0.0, 0.7, 2.5] {
            for t in [0.05, 0.5, 1.0, 3.0, 8.0] {
                let (f, d1, d2) = bessel_i_norm_derivatives(nu, t).unwrap();
                let residual = t * d2 + (2.0 * nu + 1.0) * d1 - t * f;
                assert!(residual.abs() <= 1e-10 * (t * f).abs().max(1.0), "nu={nu} t={t}: {residual}");
            }
        }
        let (_, d1, _) = bessel_i_norm_derivatives(-0.5, 2.0).unwrap();
        assert!(close(d1, libm::sinh(2.0), 1e-14));
    }

    #[test]
    fn series_trivial_values() {
        let k = kp(0.7);
        assert_eq!(hyp0f1_two(2.0, &k, [0.4, 0.9], [0.0, 0.0], 10).unwrap().value, 1.0);
        assert_eq!(hyp0f1_two(2.0, &k, [0.0, 0.0], [0.0, 0.0], 10).unwrap().value, 1.0);
        let s = hyp0f1_two(2.0, &k, [0.4, 0.9], [0.3, 0.2], 0).unwrap();
        assert_eq!((s.value, s.truncation), (1.0, 1.0));
    }

    #[test]
    fn series_skips_vanishing_numerators_at_poles() {
        // (μ − k)_2 = (−1)(0) = 0 but every two-row term has P(y) = 0 at y = (1, 0)
        let v = hyp0f1_two(1.0, &kp(2.0), [0.3, 0.2], [1.0, 0.0], 20).unwrap();
        assert!(v.value.is_finite());
        assert_eq!(hyp0f1_two(1.0, &kp(2.0), [0.3, 0.2], [1.0, 0.5], 20), Err(Error::PochhammerPole));
    }

    #[test]
    fn series_one_variable_degeneration() {
        // with x = (t²/2, 0) only one-row partitions survive and the sum is
        // a single-variable Bessel function once the y₂ = 0 integral collapses
        let t = 0.9;
        let s = hyp0f1_two(1.5, &kp(0.5), [t * t / 2.0, 0.0], [1.0, 0.0], 40).unwrap().value;
        let single = hyp0f1_single_integral(1.5, 0.5, [t * t / 2.0, 0.0], 64).unwrap();
        assert!(close(s, single, 1e-12), "{s} vs {single}");
    }

    #[test]
    fn truncation_estimate_decreases() {
        let kap = kappa(0.6, 1.1);
        let mut prev = f64::INFINITY;
        for deg in 0..30 {
            let t = bessel_b2_series(&kap, [0.9, -0.4], [1.0, 0.7], deg).unwrap().truncation;
            assert!(t < prev, "degree {deg}");
            prev = t;
        }
    }

    #[test]
    fn series_is_even_in_each_argument() {
        let kap = kappa(0.8, 1.3);
        let a = bessel_b2_series(&kap, [0.6, 0.2], [0.4, 0.1], 30).unwrap().value;
        let b = bessel_b2_series(&kap, [-0.6, 0.2], [0.4, -0.1], 30).unwrap().value;
        assert_eq!(a, b);
        assert_eq!(bessel_b2_series(&kap, [0.6, 0.2], [0.0, 0.0], 30).unwrap().value, 1.0);
    }

    #[test]
    fn single_integral_examples() {
        assert!(close(hyp0f1_single_integral(2.0, 1.0, [0.0, 0.0], 16).unwrap(), 1.0, 1e-14));
        let s = 0.35;
        let got = hyp0f1_single_integral(2.4, 0.7, [s, s], 16).unwrap();
        assert!(close(got, bessel_i_norm(1.4, 2.0 * libm::sqrt(s)).unwrap(), 1e-14));
        let single = hyp0f1_single_integral(2.0, 1.0, [1.0, 0.3], 64).unwrap();
        let series = hyp0f1_two(2.0, &kp(1.0), [1.0, 0.3], [1.0, 0.0], 40).unwrap().value;
        assert!(close(single, series, 1e-9), "{single} vs {series}");
        assert!(hyp0f1_single_integral(2.0, 1.0, [-0.1, 0.3], 8).is_err());
    }

    #[test]
    fn double_integral_examples() {
        let kap = kappa(0.8, 1.3);
        for order in DoubleIntegralOrder::CANDIDATES {
            let v = bessel_b2_double_integral(&kap, [0.0, 0.0], [0.5, 0.9], 16, 16, order).unwrap();
            assert!(close(v, 1.0, 1e-13));
        }
        let series = bessel_b2_series(&kap, [0.6, 0.2], [0.4, 0.1], 30).unwrap().value;
        let t3 =
            bessel_b2_double_integral(&kap, [0.6, 0.2], [0.4, 0.1], 64, 64, DoubleIntegralOrder::MuMinusOne).unwrap();
        assert!(close(series, t3, 1e-7), "{series} vs {t3}");
        let kap = kappa(1.0, 1.0);
        let series = bessel_b2_series(&kap, [0.5, 0.2], [0.3, 0.1], 30).unwrap().value;
        let t3 =
            bessel_b2_double_integral(&kap, [0.5, 0.2], [0.3, 0.1], 64, 64, DoubleIntegralOrder::MuMinusOne).unwrap();
        assert!(close(series, t3, 1e-8));
        assert!(bessel_b2_double_integral(&kap, [0.5, -0.2], [0.3, 0.1], 8, 8, DoubleIntegralOrder::Mu).is_err());
    }

    #[test]
    fn double_integral_equal_components_reduce_to_one_integral() {
        // x = (s, s), y = (t, t): Z = 4s²t²(1 + v), so the u-integral is trivial
        let kap = kappa(0.9, 1.7);
        let (s, t) = (0.7, 0.4);
        let nu = kap.order_mu() - 1.0;
        let rule = gauss_jacobi_rule(48, 0.9).unwrap();
        let one = normalization_c(0.9)
            * rule.integrate(|v| bessel_i_norm(nu, libm::sqrt(2.0 * s * s * t * t * (1.0 + v))).unwrap());
        let two = bessel_b2_double_integral(&kap, [s, s], [t, t], 8, 48, DoubleIntegralOrder::MuMinusOne).unwrap();
        assert!(close(one, two, 1e-13));
    }

    #[test]
    fn resolution_picks_one_order() {
        for kap in [kappa(1.0, 1.0), kappa(0.5, 0.5)] {
            let r = resolve_double_integral_order(&kap, 42).unwrap();
            assert_eq!(r.order, DoubleIntegralOrder::MuMinusOne);
            assert!(r.selected_error < 1e-7 && r.rejected_error > 1e-3, "{r:?}");
        }
    }

    #[test]
    fn rotation_symmetry_examples() {
        let r = bessel_rotation_symmetry(&kappa(0.7, 1.4), [0.0, 0.0], [0.0, 0.0], 30, 1e-8).unwrap();
        assert!(r.pass && r.lhs == 1.0);
        let r = bessel_rotation_symmetry(&kappa(1.0, 1.0), [0.5, 0.1], [0.2, 0.3], 30, 1e-8).unwrap();
        assert!(r.pass, "{r:?}");
        let r = bessel_rotation_symmetry(&kappa(0.7, 1.4), [0.5, 0.1], [0.2, 0.3], 30, 1e-8).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn rotation_needs_both_the_swap_and_the_rotation() {
        let k = kappa(0.8, 1.3);
        let (x, y) = ([0.7, 0.05], [0.6, 0.4]);
        let base = bessel_b2_series(&k, x, y, 40).unwrap().value;
        let swapped_only = bessel_b2_series(&k.swapped(), x, y, 40).unwrap().value;
        let rotated_only = bessel_b2_series(&k, rotate_pair(x), rotate_pair(y), 40).unwrap().value;
        assert!(!close(base, swapped_only, 1e-8));
        assert!(!close(base, rotated_only, 1e-8));
        assert!(bessel_rotation_symmetry(&k, x, y, 40, 1e-12).unwrap().pass);
    }

    #[test]
    fn classical_product_examples() {
        // order k − ½ = 0 at k = ½: I₀(1)² with I₀(1) = 1.2660658777520082
        let r = bessel_product_identity(0.5, 1.0, 1.0, 64, 1e-12).unwrap();
        assert!(close(r.lhs, 1.2660658777520082 * 1.2660658777520082, 1e-15));
        assert!(r.pass, "{r:?}");
        let r = bessel_product_identity(1.5, 1.0, 2.0, 64, 1e-10).unwrap();
        assert!(r.pass, "{r:?}");
        let r = bessel_product_identity(1.5, 3.0, 0.0, 64, 1e-14).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(bessel_product_identity(1.5, 3.0, 0.0, 32, 1e-14).is_err());
    }

    #[test]
    fn limit_transition_approaches_bessel() {
        assert_eq!(limit_transition(&kp(0.5), 0.0, 8).unwrap(), 1.0);
        let target = 1.2660658777520082;
        assert!(close(bessel_i_norm(0.0, 1.0).unwrap(), target, 1e-15));
        let errs: [f64; 4] =
            core::array::from_fn(|i| (limit_transition(&kp(0.5), 1.0, 8 << i).unwrap() - target).abs());
        assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
        assert!(limit_transition(&kp(0.5), 9.0, 8).is_err());
    }
}
