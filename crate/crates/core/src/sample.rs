//! Seeded sampling shared by the verification sweeps, so the same seed gives
//! the same points everywhere.

use rand_core::{Rng, SeedableRng};
use rand_pcg::Pcg64;

pub const DEFAULT_SEED: u64 = 42;

/// Deterministic uniform sampler over half-open intervals.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: Pcg64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: Pcg64::seed_from_u64(seed) }
    }

    /// Uniform in [0, 1) from the top 53 bits.
    pub fn unit(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.unit()
    }

    /// Uniform in (lo, hi]; used where the lower end is excluded.
    pub fn uniform_open_low(&mut self, lo: f64, hi: f64) -> f64 {
        hi - (hi - lo) * self.unit()
    }

    pub fn pair(&mut self, lo: f64, hi: f64) -> [f64; 2] {
        [self.uniform(lo, hi), self.uniform(lo, hi)]
    }
}
