//! Gauss–Jacobi quadrature for the symmetric weight (1−u²)^{k−1} on [−1, 1].
//!
//! Nodes come from the eigenvalues of the Jacobi matrix of the monic
//! recurrence π_{n+1} = u π_n − β_n π_{n−1}, with
//! β_n = n(n+2k−2) / ((2n+2k−1)(2n+2k−3)) and β₁ = 1/(2k+1). Each eigenvalue
//! is then polished by Newton steps on π_N, and weights are values of the
//! Christoffel function 1/Σ_{j<N} π_j(u_i)²/h_j. The polish runs in
//! double-double arithmetic so the weights next to ±1 keep full relative
//! accuracy even for k < 1.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::special::{beta_half, gamma_ratio, Neumaier};

/// Nodes and weights for ∫₋₁¹ f(u)(1−u²)^{k−1} du.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    k: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn npoints(&self) -> usize {
        self.nodes.len()
    }

    /// Nodes and weights for ∫_a^b g(ν)(ν−a)^{k−1}(b−ν)^{k−1} dν.
    pub fn mapped(&self, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let scale = libm::pow(half, 2.0 * self.k - 1.0);
        let nodes = self.nodes.iter().map(|u| mid + half * u).collect();
        let weights = self.weights.iter().map(|w| w * scale).collect();
        (nodes, weights)
    }

    /// Σ w_i f(u_i) with compensated summation.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        let mut acc = Neumaier::default();
        for (u, w) in self.nodes.iter().zip(&self.weights) {
            acc.add(w * f(*u));
        }
        acc.sum()
    }

    /// Like [`integrate`](Self::integrate) for fallible integrands; the
    /// failing node index is attached to the error.
    pub fn try_integrate(&self, mut f: impl FnMut(f64) -> Result<f64>) -> Result<f64> {
        let mut acc = Neumaier::default();
        for (i, (u, w)) in self.nodes.iter().zip(&self.weights).enumerate() {
            let v = f(*u).map_err(|e| Error::Integrand { node: i, source: alloc::boxed::Box::new(e) })?;
            acc.add(w * v);
        }
        Ok(acc.sum())
    }
}

/// Double-double value hi + lo used for the recurrence polish.
#[derive(Clone, Copy, Debug)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    fn renorm(hi: f64, lo: f64) -> Dd {
        let s = hi + lo;
        Dd { hi: s, lo: lo - (s - hi) }
    }

    fn add(self, o: Dd) -> Dd {
        let s = self.hi + o.hi;
        let bb = s - self.hi;
        let err = (self.hi - (s - bb)) + (o.hi - bb);
        Dd::renorm(s, err + self.lo + o.lo)
    }

    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let err = libm::fma(self.hi, o.hi, -p) + self.hi * o.lo + self.lo * o.hi;
        Dd::renorm(p, err)
    }

    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul(Dd::new(q1)));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul(Dd::new(q2)));
        let q3 = r.hi / o.hi;
        Dd::renorm(q1, q2).add(Dd::new(q3))
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// β_n of the monic recurrence, in double-double.
fn recurrence_beta(n: usize, k: f64) -> Dd {
    let one = Dd::new(1.0);
    let two_k = Dd::new(2.0 * k);
    if n == 1 {
        return one.div(two_k.add(one));
    }
    let nf = Dd::new(n as f64);
    let two_n = Dd::new(2.0 * n as f64);
    let num = nf.mul(nf.add(two_k).sub(Dd::new(2.0)));
    let den = two_n.add(two_k).sub(one).mul(two_n.add(two_k).sub(Dd::new(3.0)));
    num.div(den)
}

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
/// off-diagonal `e` (e[i] couples i and i+1), by implicit QL with Wilkinson
/// shifts. `d` is overwritten with the eigenvalues.
fn tridiagonal_eigenvalues(d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let scale = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * scale {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 100 {
                break;
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = libm::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + libm::copysign(r, g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = libm::hypot(f, g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

/// (π_{N−1}(u), π_N(u), π′_N(u)) for the monic recurrence, in double-double.
fn monic_eval(u: f64, betas: &[Dd], npoints: usize) -> (Dd, Dd, Dd) {
    let x = Dd::new(u);
    let (mut p_prev, mut p) = (Dd::ZERO, Dd::new(1.0));
    let (mut dp_prev, mut dp) = (Dd::ZERO, Dd::ZERO);
    for &beta in &betas[..npoints] {
        let p_next = x.mul(p).sub(beta.mul(p_prev));
        let dp_next = p.add(x.mul(dp)).sub(beta.mul(dp_prev));
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
    }
    (p_prev, p, dp)
}

/// λ_N(u) = 1 / Σ_{j<N} π_j(u)²/h_j with h_j = B(½,k) β₁⋯β_j.
fn christoffel(u: f64, betas: &[Dd], mass: Dd, npoints: usize) -> f64 {
    let x = Dd::new(u);
    let (mut p_prev, mut p) = (Dd::ZERO, Dd::new(1.0));
    let mut norm = mass;
    let mut sum = Dd::new(1.0).div(mass);
    for n in 1..npoints {
        let p_next = x.mul(p).sub(betas[n - 1].mul(p_prev));
        p_prev = p;
        p = p_next;
        norm = norm.mul(betas[n]);
        sum = sum.add(p.mul(p).div(norm));
    }
    Dd::new(1.0).div(sum).to_f64()
}

/// Gauss–Jacobi rule with `npoints` nodes for the weight (1−u²)^{k−1}.
pub fn gauss_jacobi_rule(npoints: usize, k: f64) -> Result<QuadratureRule> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::NonPositiveParameter);
    }
    if npoints == 0 {
        return Err(Error::TooFewNodes { needed: 1, found: 0 });
    }
    // betas[n] for n = 1..npoints; betas[0] is zero so π₁ = u
    let mut betas = Vec::with_capacity(npoints + 1);
    betas.push(Dd::ZERO);
    for n in 1..=npoints {
        betas.push(recurrence_beta(n, k));
    }

    let mut diag = alloc::vec![0.0; npoints];
    let mut off: Vec<f64> =
        (1..=npoints).map(|n| if n < npoints { libm::sqrt(betas[n].to_f64()) } else { 0.0 }).collect();
    tridiagonal_eigenvalues(&mut diag, &mut off);
    diag.sort_by(f64::total_cmp);

    let mass = Dd::new(beta_half(k));

    let mut nodes = Vec::with_capacity(npoints);
    let mut weights = Vec::with_capacity(npoints);
    for &guess in &diag {
        let mut u = guess;
        for _ in 0..4 {
            let (_, p, dp) = monic_eval(u, &betas, npoints);
            if dp.hi == 0.0 {
                break;
            }
            let step = p.div(dp).to_f64();
            u -= step;
            if step.abs() <= f64::EPSILON * 1e-2 * u.abs().max(1e-300) {
                break;
            }
        }
        nodes.push(u);
        weights.push(christoffel(u, &betas, mass, npoints));
    }

    // enforce exact mirror symmetry
    for i in 0..npoints / 2 {
        let j = npoints - 1 - i;
        let node = 0.5 * (nodes[j] - nodes[i]);
        let weight = 0.5 * (weights[i] + weights[j]);
        nodes[i] = -node;
        nodes[j] = node;
        weights[i] = weight;
        weights[j] = weight;
    }
    if npoints % 2 == 1 {
        nodes[npoints / 2] = 0.0;
    }
    Ok(QuadratureRule { k, nodes, weights })
}

/// ∫₋₁¹ u^{2j}(1−u²)^{k−1} du = B(j+½, k).
pub fn even_moment(j: u32, k: f64) -> f64 {
    let mut acc = beta_half(k);
    for i in 0..j {
        let i = f64::from(i);
        acc *= (i + 0.5) / (i + k + 0.5);
    }
    acc
}

/// Γ(k+½)/(Γ(k)√π), the constant making (1−u²)^{k−1} a probability weight.
pub fn normalization_c(k: f64) -> f64 {
    gamma_ratio(k + 0.5, k) / libm::sqrt(core::f64::consts::PI)
}
