//! Integer partitions, dominance order, and the scalar combinatorics attached to them.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::scalar::{rising, Scalar};

/// A weakly decreasing tuple of nonnegative integers with trailing zeros trimmed.
///
/// The derived `Ord` is lexicographic on the parts, which is a linear extension
/// of dominance order on partitions of equal weight.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, rejecting sequences that are not weakly decreasing.
    /// Trailing zeros are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary exponents into a partition.
    pub fn from_exponents(exponents: &[u32]) -> Self {
        let mut parts = exponents.to_vec();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |λ|, the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The i-th part (0-based), zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        self.check_fits(n)?;
        let mut v = self.0.clone();
        v.resize(n, 0);
        Ok(v)
    }

    pub(crate) fn check_fits(&self, n: usize) -> Result<()> {
        if self.len() > n {
            Err(Error::TooManyParts { parts: self.len(), nvars: n })
        } else {
            Ok(())
        }
    }

    /// The conjugate partition: λ′_j = #{i : λ_i ≥ j}.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect();
        Partition(parts)
    }

    /// Multiplies every part by `factor`.
    pub fn scaled(&self, factor: u32) -> Partition {
        if factor == 0 {
            return Partition::empty();
        }
        Partition(self.0.iter().map(|p| p * factor).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// True iff `mu` ≤ `lambda` in dominance order. Partitions of different
/// weight are incomparable.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> bool {
    if mu.weight() != lambda.weight() {
        return false;
    }
    let len = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0u32, 0u32);
    for i in 0..len {
        sm += mu.part(i);
        sl += lambda.part(i);
        if sm > sl {
            return false;
        }
    }
    true
}

/// All partitions of `d` with at most `max_parts` parts, in decreasing
/// lexicographic order.
pub fn partitions_of_weight(d: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(rem: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Partitions with at most `max_parts` parts dominated by `lambda`, in
/// decreasing lexicographic order (so `lambda` comes first).
pub fn dominated_partitions(lambda: &Partition, max_parts: usize) -> Vec<Partition> {
    partitions_of_weight(lambda.weight(), max_parts).into_iter().filter(|mu| dominance_leq(mu, lambda)).collect()
}

/// The Jack parameter k = 1/α, strictly positive.
#[derive(Clone, Debug, PartialEq)]
pub struct JackParameter<T> {
    k: T,
}

impl<T: Scalar> JackParameter<T> {
    pub fn new(k: T) -> Result<Self> {
        if k.is_positive() {
            Ok(JackParameter { k })
        } else {
            Err(Error::NonPositiveParameter)
        }
    }

    pub fn value(&self) -> &T {
        &self.k
    }

    /// Jack's α = 1/k.
    pub fn alpha(&self) -> T {
        T::one() / self.k.clone()
    }
}

/// e_λ = Σ_{i=1}^{n} λ_i (λ_i + 2k(n−i) − 1), the eigenvalue of the
/// Laplace–Beltrami-type operator on P_λ.
pub fn eigenvalue_e<T: Scalar>(lambda: &Partition, k: &JackParameter<T>, n: usize) -> Result<T> {
    lambda.check_fits(n)?;
    let two_k = T::from_int(2) * k.value().clone();
    let mut acc = T::zero();
    for (i, &p) in lambda.parts().iter().enumerate() {
        let p = T::from_int(i64::from(p));
        let shift = T::from_int((n - 1 - i) as i64);
        acc = acc + p.clone() * (p + two_k.clone() * shift - T::one());
    }
    Ok(acc)
}

/// h_k(λ) = ∏ over cells (i, j) of (λ_i − j + 1 + k(λ′_j − i)).
pub fn hook_product_h<T: Scalar>(lambda: &Partition, k: &JackParameter<T>) -> T {
    let conj = lambda.conjugate();
    let mut acc = T::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = i64::from(row) - j as i64;
            let leg = i64::from(conj.part(j)) - (i as i64 + 1);
            acc = acc * (T::from_int(arm) + k.value().clone() * T::from_int(leg));
        }
    }
    acc
}

/// [μ]_λ^k = ∏_{j=1}^{n} (μ − k(j−1))_{λ_j}.
pub fn gen_pochhammer<T: Scalar>(mu_order: &T, lambda: &Partition, k: &JackParameter<T>, n: usize) -> Result<T> {
    lambda.check_fits(n)?;
    let mut acc = T::one();
    for j in 0..n {
        let base = mu_order.clone() - k.value().clone() * T::from_int(j as i64);
        acc = acc * rising(&base, lambda.part(j));
    }
    Ok(acc)
}

/// All exponent vectors obtained by permuting the padded parts, each once.
pub(crate) fn distinct_permutations(lambda: &Partition, n: usize) -> Result<Vec<Vec<u32>>> {
    let mut cur = lambda.padded(n)?;
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    Ok(out)
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
