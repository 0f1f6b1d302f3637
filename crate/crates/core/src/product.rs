//! The two-variable product formula
//! P(x)P(y)/P(1,1) = c_k ∫₋₁¹ P(X₁(u), X₂(u)) (1−u²)^{k−1} du,
//! where X₁ ≥ X₂ are the eigenvalues of s^{1/2} k_θ t k_θ′ s^{1/2} written in
//! terms of u = cos 2θ.

use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::jack::jack_p_two_var;
use crate::partition::{JackParameter, Partition};
use crate::quadrature::{gauss_jacobi_rule, normalization_c};
use crate::report::VerificationReport;
use crate::special::Neumaier;

/// Discriminants down to this multiple of −α² are rounding noise and clamp to 0.
pub const DISCRIMINANT_CLAMP: f64 = 1e-12;

/// The split scalars α, a, ā and the eigenvalue pair X₁ ≥ X₂ at one u.
///
/// `alpha_split` is the trace X₁ + X₂; it is unrelated to Jack's α = 1/k.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SplitPair {
    pub alpha_split: f64,
    pub a: f64,
    pub a_bar: f64,
    pub x1_big: f64,
    pub x2_small: f64,
    pub discriminant: f64,
}

fn check_pair(v: [f64; 2], what: &'static str) -> Result<()> {
    if v.iter().all(|c| c.is_finite() && *c >= 0.0) {
        Ok(())
    } else {
        Err(Error::Domain(what))
    }
}

/// X₁,₂(u) = ½(α ± √(α² − 4x₁x₂y₁y₂)) with
/// α = ½((x₁+x₂)(y₁+y₂) + (x₁−x₂)(y₁−y₂)u).
///
/// The discriminant is evaluated as (x₁a − x₂ā)² + x₁x₂(y₁−y₂)²(1−u²), which
/// is algebraically equal to α² − 4x₁x₂y₁y₂ but free of cancellation, and
/// X₂ is recovered as x₁x₂y₁y₂/X₁.
pub fn eigen_split(x: [f64; 2], y: [f64; 2], u: f64) -> Result<SplitPair> {
    check_pair(x, "x must be componentwise nonnegative")?;
    check_pair(y, "y must be componentwise nonnegative")?;
    if !(u.abs() <= 1.0) {
        return Err(Error::Domain("u must lie in [-1, 1]"));
    }
    let [x1, x2] = x;
    let [y1, y2] = y;
    let a = 0.5 * (y1 + y2 + (y1 - y2) * u);
    let a_bar = 0.5 * (y1 + y2 - (y1 - y2) * u);
    let alpha_split = x1 * a + x2 * a_bar;
    let diff = x1 * a - x2 * a_bar;
    let mut discriminant = diff * diff + x1 * x2 * (y1 - y2) * (y1 - y2) * (1.0 - u * u);
    if discriminant < 0.0 {
        if discriminant >= -DISCRIMINANT_CLAMP * alpha_split * alpha_split {
            discriminant = 0.0;
        } else {
            return Err(Error::NegativeDiscriminant(discriminant));
        }
    }
    let x1_big = 0.5 * (alpha_split + libm::sqrt(discriminant));
    let x2_small = if x1_big > 0.0 { x1 * x2 * y1 * y2 / x1_big } else { 0.0 };
    Ok(SplitPair { alpha_split, a, a_bar, x1_big, x2_small, discriminant })
}

/// Eigenvalues (decreasing) of the explicit matrix s^{1/2} k_θ t k_θ′ s^{1/2}.
pub fn rotation_conjugate_eigs(x: [f64; 2], y: [f64; 2], theta: f64) -> Result<(f64, f64)> {
    check_pair(x, "x must be componentwise nonnegative")?;
    check_pair(y, "y must be componentwise nonnegative")?;
    let [x1, x2] = x;
    let [y1, y2] = y;
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    let m11 = x1 * y1 * c * c + x1 * y2 * s * s;
    let m22 = x2 * y2 * c * c + x2 * y1 * s * s;
    let m12 = libm::sqrt(x1 * x2) * (y1 - y2) * c * s;
    let trace = m11 + m22;
    let det = m11 * m22 - m12 * m12;
    let gap = libm::sqrt((m11 - m22) * (m11 - m22) + 4.0 * m12 * m12);
    let big = 0.5 * (trace + gap);
    let small = if big > 0.0 { det / big } else { 0.0 };
    Ok((big, small))
}

/// P_λ(x) P_λ(y) / P_λ(1, 1).
pub fn product_lhs(lambda: &Partition, k: &JackParameter<f64>, x: [f64; 2], y: [f64; 2]) -> Result<f64> {
    let px = jack_p_two_var(lambda, k, &x[0], &x[1])?;
    let py = jack_p_two_var(lambda, k, &y[0], &y[1])?;
    let ones = jack_p_two_var(lambda, k, &1.0, &1.0)?;
    Ok(px * py / ones)
}

/// Smallest node count integrating the degree-(λ₁−λ₂) integrand exactly.
pub fn min_product_nodes(lambda: &Partition) -> usize {
    let m = lambda.part(0) - lambda.part(1);
    (m as usize + 2) / 2
}

/// c_k ∫₋₁¹ P_λ(X₁(u), X₂(u)) (1−u²)^{k−1} du by Gauss–Jacobi.
pub fn product_rhs(
    lambda: &Partition,
    k: &JackParameter<f64>,
    x: [f64; 2],
    y: [f64; 2],
    npoints: usize,
) -> Result<f64> {
    lambda.check_fits(2)?;
    let needed = min_product_nodes(lambda);
    if npoints < needed {
        return Err(Error::TooFewNodes { needed, found: npoints });
    }
    let rule = gauss_jacobi_rule(npoints, *k.value())?;
    let integral = rule.try_integrate(|u| {
        let split = eigen_split(x, y, u)?;
        jack_p_two_var(lambda, k, &split.x1_big, &split.x2_small)
    })?;
    Ok(normalization_c(*k.value()) * integral)
}

pub fn verify_product(
    lambda: &Partition,
    k: &JackParameter<f64>,
    x: [f64; 2],
    y: [f64; 2],
    npoints: usize,
    tol: f64,
) -> Result<VerificationReport> {
    let lhs = product_lhs(lambda, k, x, y)?;
    let rhs = product_rhs(lambda, k, x, y, npoints)?;
    Ok(VerificationReport::compare(lhs, rhs, tol))
}

/// Normalized SO(2) average of the zonal (k = ½) polynomial over the
/// equispaced grid θ_j = 2πj/ntheta:
/// (1/ntheta) Σ_j P_λ^{1/2}(eigs(s^{1/2} k_θj t k_θj′ s^{1/2})).
pub fn zonal_so2_average(lambda: &Partition, x: [f64; 2], y: [f64; 2], ntheta: usize) -> Result<f64> {
    lambda.check_fits(2)?;
    if ntheta == 0 {
        return Err(Error::TooFewNodes { needed: 1, found: 0 });
    }
    let half = JackParameter::new(0.5)?;
    let mut acc = Neumaier::default();
    for j in 0..ntheta {
        let theta = 2.0 * PI * j as f64 / ntheta as f64;
        let (big, small) = rotation_conjugate_eigs(x, y, theta)?;
        acc.add(jack_p_two_var(lambda, &half, &big, &small)?);
    }
    Ok(acc.sum() / ntheta as f64)
}
