//! Symmetric polynomials in the monomial basis and the Laplace–Beltrami-type
//! operator D_k = Σ x_i² ∂_i² + 2k Σ_{i≠j} x_i²/(x_i − x_j) ∂_i.
//!
//! `m_λ` is the sum of the *distinct* monomials whose exponent multiset is λ,
//! so `m_(1,1)(x₁, x₂) = x₁x₂` with coefficient one.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::{distinct_permutations, JackParameter, Partition};
use crate::scalar::Scalar;

/// A symmetric polynomial Σ c_μ m_μ in `nvars` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialExpansion<T> {
    nvars: usize,
    coeffs: BTreeMap<Partition, T>,
}

impl<T: Scalar> MonomialExpansion<T> {
    pub fn new(nvars: usize) -> Self {
        MonomialExpansion { nvars, coeffs: BTreeMap::new() }
    }

    /// The single basis element m_λ.
    pub fn monomial(lambda: Partition, nvars: usize) -> Result<Self> {
        let mut p = Self::new(nvars);
        p.add_term(lambda, T::one())?;
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `c · m_μ`, dropping the entry if the coefficient cancels.
    pub fn add_term(&mut self, mu: Partition, c: T) -> Result<()> {
        mu.check_fits(self.nvars)?;
        if c.is_zero() {
            return Ok(());
        }
        match self.coeffs.remove(&mu) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.coeffs.insert(mu, sum);
                }
            }
            None => {
                self.coeffs.insert(mu, c);
            }
        }
        Ok(())
    }

    pub fn coeff(&self, mu: &Partition) -> T {
        self.coeffs.get(mu).cloned().unwrap_or_else(T::zero)
    }

    /// Terms in decreasing lexicographic order of the partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.coeffs.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Common weight of all keys; `None` for the zero polynomial or a mixed expansion.
    pub fn degree(&self) -> Option<u32> {
        let mut weights = self.coeffs.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_empty() || self.degree().is_some()
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::new(self.nvars);
        for (mu, v) in &self.coeffs {
            // keys already fit
            let _ = out.add_term(mu.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars });
        }
        let mut out = self.clone();
        for (mu, v) in &other.coeffs {
            out.add_term(mu.clone(), v.clone())?;
        }
        Ok(out)
    }

    /// Evaluates Σ c_μ m_μ(x).
    pub fn eval(&self, x: &[T]) -> Result<T> {
        if x.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: x.len() });
        }
        let mut acc = T::zero();
        for (mu, c) in &self.coeffs {
            acc = acc + c.clone() * monomial_eval(mu, x)?;
        }
        Ok(acc)
    }

    /// Multiplies a two-variable expansion by (x₁x₂)^c.
    pub fn scale_by_rectangle(&self, c: u32) -> Result<Self> {
        if self.nvars != 2 {
            return Err(Error::UnsupportedDimension(self.nvars));
        }
        let mut out = Self::new(2);
        for (mu, v) in &self.coeffs {
            let shifted = Partition::new([mu.part(0) + c, mu.part(1) + c].to_vec())?;
            out.add_term(shifted, v.clone())?;
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> MonomialExpansion<U> {
        let mut out = MonomialExpansion::new(self.nvars);
        for (mu, v) in &self.coeffs {
            let _ = out.add_term(mu.clone(), f(v));
        }
        out
    }
}

/// m_λ(x): the sum over distinct rearrangements of the exponents λ.
pub fn monomial_eval<T: Scalar>(lambda: &Partition, x: &[T]) -> Result<T> {
    let mut acc = T::zero();
    for exps in distinct_permutations(lambda, x.len())? {
        let mut term = T::one();
        for (xi, &e) in x.iter().zip(&exps) {
            if e > 0 {
                term = term * xi.powu(e);
            }
        }
        acc = acc + term;
    }
    Ok(acc)
}

type ExponentMap<T> = BTreeMap<Vec<u32>, T>;

fn accumulate<T: Scalar>(map: &mut ExponentMap<T>, exps: Vec<u32>, c: T) {
    match map.remove(&exps) {
        Some(old) => {
            let sum = old + c;
            if !sum.is_zero() {
                map.insert(exps, sum);
            }
        }
        None if !c.is_zero() => {
            map.insert(exps, c);
        }
        None => {}
    }
}

/// D_k m_λ as an exponent-vector map over all n-variable monomials.
///
/// Each ordered pair i < j is handled orbit-wise: the monomial x^a with
/// a_i = p > q = a_j is combined with its transposed partner, and the
/// numerator p(x^{p+1}y^q − x^q y^{p+1}) − q(x^p y^{q+1} − x^{q+1} y^p) is
/// divided by x − y as a telescoping sum. When p = q the single term reduces
/// to p · x^a.
fn lb_on_monomial<T: Scalar>(lambda: &Partition, k: &T, n: usize) -> Result<ExponentMap<T>> {
    let two_k = T::from_int(2) * k.clone();
    let mut out = ExponentMap::new();
    for a in distinct_permutations(lambda, n)? {
        let diag: i64 = a.iter().map(|&e| i64::from(e) * (i64::from(e) - 1)).sum();
        accumulate(&mut out, a.clone(), T::from_int(diag));
        for i in 0..n {
            for j in (i + 1)..n {
                let (p, q) = (a[i], a[j]);
                if p == q {
                    accumulate(&mut out, a.clone(), two_k.clone() * T::from_int(i64::from(p)));
                } else if p > q {
                    let mut e = a.clone();
                    let coef_p = two_k.clone() * T::from_int(i64::from(p));
                    for t in 0..=(p - q) {
                        e[i] = q + t;
                        e[j] = p - t;
                        accumulate(&mut out, e.clone(), coef_p.clone());
                    }
                    if p - q >= 2 {
                        let coef_q = -(two_k.clone() * T::from_int(i64::from(q)));
                        for t in 0..=(p - q - 2) {
                            e[i] = q + 1 + t;
                            e[j] = p - 1 - t;
                            accumulate(&mut out, e.clone(), coef_q.clone());
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Coefficients of D_k m_λ in the monomial basis.
pub fn lb_monomial_image<T: Scalar>(
    lambda: &Partition,
    k: &JackParameter<T>,
    n: usize,
) -> Result<MonomialExpansion<T>> {
    let map = lb_on_monomial(lambda, k.value(), n)?;
    let mut out = MonomialExpansion::new(n);
    for (exps, c) in map {
        // the image is symmetric: the sorted exponent vector carries m_μ's coefficient
        if exps.windows(2).all(|w| w[0] >= w[1]) {
            out.add_term(Partition::from_exponents(&exps), c)?;
        }
    }
    Ok(out)
}

/// Exact image of a homogeneous symmetric polynomial under D_k.
pub fn apply_lb_operator<T: Scalar>(p: &MonomialExpansion<T>, k: &JackParameter<T>) -> Result<MonomialExpansion<T>> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let mut out = MonomialExpansion::new(p.nvars);
    for (lambda, c) in &p.coeffs {
        let image = lb_monomial_image(lambda, k, p.nvars)?;
        for (mu, v) in image.coeffs {
            out.add_term(mu, v * c.clone())?;
        }
    }
    Ok(out)
}
