//! Session cache for exact Jack polynomials keyed by (λ, k, n).

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use jackprod_core::error::Result;
use jackprod_core::jack::{jack_p, JackPolynomial};
use jackprod_core::partition::{JackParameter, Partition};
use jackprod_core::scalar::Rational;

type Key = (Partition, Rational, usize);

/// Many readers, one writer at a time. A miss computes outside the lock, so
/// two racing threads may both compute the same entry; the first insert wins.
#[derive(Debug, Default)]
pub struct JackCache {
    entries: RwLock<HashMap<Key, Arc<JackPolynomial<Rational>>>>,
}

impl JackCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get_or_compute(
        &self,
        lambda: &Partition,
        k: &JackParameter<Rational>,
        n: usize,
    ) -> Result<Arc<JackPolynomial<Rational>>> {
        let key = (lambda.clone(), k.value().clone(), n);
        if let Some(hit) = self.entries.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return Ok(Arc::clone(hit));
        }
        let computed = Arc::new(jack_p(lambda, k, n)?);
        let mut map = self.entries.write().unwrap_or_else(|e| e.into_inner());
        Ok(Arc::clone(map.entry(key).or_insert(computed)))
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
