//! Floating-point helpers: compensated summation and Γ-function ratios.

use core::f64::consts::PI;

/// Neumaier's variant of Kahan summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn sum(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Γ(a)/Γ(b) for positive arguments.
pub fn gamma_ratio(a: f64, b: f64) -> f64 {
    if a < 100.0 && b < 100.0 {
        libm::tgamma(a) / libm::tgamma(b)
    } else {
        libm::exp(libm::lgamma(a) - libm::lgamma(b))
    }
}

/// B(½, k) = √π Γ(k)/Γ(k+½), the mass of (1−u²)^{k−1} on [−1, 1].
pub fn beta_half(k: f64) -> f64 {
    libm::sqrt(PI) * gamma_ratio(k, k + 0.5)
}
