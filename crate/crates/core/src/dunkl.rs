//! Exact Dunkl operators of type B₂ on polynomials with rational coefficients.
//!
//! T₁f = ∂₁f + κ₁(f − f(−x₁,x₂))/x₁ + κ₂(f − f(x₂,x₁))/(x₁−x₂) + κ₂(f − f(−x₂,−x₁))/(x₁+x₂)
//! T₂f = ∂₂f + κ₁(f − f(x₁,−x₂))/x₂ − κ₂(f − f(x₂,x₁))/(x₁−x₂) + κ₂(f − f(−x₂,−x₁))/(x₁+x₂)

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bessel::Multiplicity;
use crate::error::{Error, Result};
use crate::scalar::{binomial, Rational};

/// A polynomial Σ c_{ij} x₁^i x₂^j, not necessarily symmetric.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn monomial(i: u32, j: u32, c: Rational) -> Self {
        let mut p = Poly2::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut p = Poly2::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly2) -> Poly2 {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Poly2 {
        Poly2::from_terms(self.terms.iter().map(|(&e, v)| (e, v.clone() * c.clone())))
    }

    /// Rewrites each term with `f(i, j) -> ((i', j'), sign)`.
    fn map_terms(&self, f: impl Fn(u32, u32) -> ((u32, u32), bool)) -> Poly2 {
        Poly2::from_terms(self.terms.iter().map(|(&(i, j), c)| {
            let (e, negate) = f(i, j);
            (e, if negate { -c.clone() } else { c.clone() })
        }))
    }

    /// ∂f/∂x_direction.
    pub fn derivative(&self, direction: u8) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i, j), c) in &self.terms {
            match direction {
                1 if i > 0 => out.add_term(i - 1, j, c.clone() * Rational::from_integer(i.into())),
                2 if j > 0 => out.add_term(i, j - 1, c.clone() * Rational::from_integer(j.into())),
                _ => {}
            }
        }
        out
    }

    /// f(a₁₁x₁ + a₁₂x₂, a₂₁x₁ + a₂₂x₂) for an integer matrix a.
    pub fn compose_linear(&self, a: [[i64; 2]; 2]) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i, j), c) in &self.terms {
            let first = linear_power(a[0][0], a[0][1], i);
            let second = linear_power(a[1][0], a[1][1], j);
            for (p, cp) in &first {
                for (q, cq) in &second {
                    let (e1, e2) = (p + q, i + j - p - q);
                    out.add_term(e1, e2, c.clone() * cp.clone() * cq.clone());
                }
            }
        }
        out
    }

    /// Exact quotient by x₁ (or x₂ when `second` is set).
    fn div_by_variable(&self, second: bool) -> Result<Poly2> {
        let mut out = Poly2::zero();
        for (&(i, j), c) in &self.terms {
            match (second, i, j) {
                (false, 0, _) | (true, _, 0) => return Err(Error::InexactDivision),
                (false, _, _) => out.add_term(i - 1, j, c.clone()),
                (true, _, _) => out.add_term(i, j - 1, c.clone()),
            }
        }
        Ok(out)
    }

    /// Exact quotient by x₁ + c·x₂, one homogeneous degree at a time.
    fn div_by_linear(&self, c: i64) -> Result<Poly2> {
        let c = Rational::from_integer(c.into());
        let mut by_degree: BTreeMap<u32, Vec<Rational>> = BTreeMap::new();
        for (&(i, j), v) in &self.terms {
            let d = i + j;
            let row = by_degree.entry(d).or_insert_with(|| alloc::vec![Rational::zero(); d as usize + 1]);
            row[i as usize] = v.clone();
        }
        let mut out = Poly2::zero();
        for (d, p) in by_degree {
            if d == 0 {
                return Err(Error::InexactDivision);
            }
            // q has degree d−1; q_i is the coefficient of x₁^i x₂^{d−1−i}
            let d = d as usize;
            let mut q = alloc::vec![Rational::zero(); d];
            q[d - 1] = p[d].clone();
            for i in (1..d).rev() {
                q[i - 1] = p[i].clone() - c.clone() * q[i].clone();
            }
            if p[0] != c.clone() * q[0].clone() {
                return Err(Error::InexactDivision);
            }
            for (i, qi) in q.into_iter().enumerate() {
                out.add_term(i as u32, (d - 1 - i) as u32, qi);
            }
        }
        Ok(out)
    }
}

/// Coefficients of (a·x₁ + b·x₂)^n as (power of x₁, coefficient).
fn linear_power(a: i64, b: i64, n: u32) -> Vec<(u32, Rational)> {
    (0..=n)
        .map(|p| {
            let c = binomial::<Rational>(n, p) * pow_int(a, p) * pow_int(b, n - p);
            (p, c)
        })
        .collect()
}

fn pow_int(a: i64, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= Rational::from_integer(a.into());
    }
    acc
}

fn negate_first(p: &Poly2) -> Poly2 {
    p.map_terms(|i, j| ((i, j), i % 2 == 1))
}

fn negate_second(p: &Poly2) -> Poly2 {
    p.map_terms(|i, j| ((i, j), j % 2 == 1))
}

fn swap(p: &Poly2) -> Poly2 {
    p.map_terms(|i, j| ((j, i), false))
}

fn negated_swap(p: &Poly2) -> Poly2 {
    p.map_terms(|i, j| ((j, i), (i + j) % 2 == 1))
}

/// T₁^κ p or T₂^κ p, exactly.
pub fn dunkl_apply(p: &Poly2, kappa: &Multiplicity<Rational>, direction: u8) -> Result<Poly2> {
    let (k1, k2) = (kappa.kappa1(), kappa.kappa2());
    let short = match direction {
        1 => p.sub(&negate_first(p)).div_by_variable(false)?,
        2 => p.sub(&negate_second(p)).div_by_variable(true)?,
        _ => return Err(Error::Domain("direction must be 1 or 2")),
    };
    let minus = p.sub(&swap(p)).div_by_linear(-1)?;
    let plus = p.sub(&negated_swap(p)).div_by_linear(1)?;
    let minus_sign = if direction == 1 { k2.clone() } else { -k2.clone() };
    Ok(p.derivative(direction).add(&short.scale(k1)).add(&minus.scale(&minus_sign)).add(&plus.scale(k2)))
}

/// The scaled rotation ρ(x) = (x₁ + x₂, −x₁ + x₂) = √2 · r(x).
pub const SCALED_ROTATION: [[i64; 2]; 2] = [[1, 1], [-1, 1]];

/// Result of the exact intertwining check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntertwiningCheck {
    Holds,
    Fails { direction: u8, exponent: (u32, u32), lhs: Rational, rhs: Rational },
}

impl IntertwiningCheck {
    pub fn holds(&self) -> bool {
        matches!(self, IntertwiningCheck::Holds)
    }
}

/// Checks T₁^κ[p∘ρ] = ((T₁^{κ′} − T₂^{κ′})p)∘ρ and
/// T₂^κ[p∘ρ] = ((T₁^{κ′} + T₂^{κ′})p)∘ρ with κ′ = (κ₂, κ₁).
///
/// With the scaled rotation ρ the factors of √2 cancel degree by degree,
/// so the comparison stays in exact rational arithmetic.
pub fn check_rotation_intertwining(p: &Poly2, kappa: &Multiplicity<Rational>) -> Result<IntertwiningCheck> {
    let swapped = kappa.swapped();
    let rotated = p.compose_linear(SCALED_ROTATION);
    let t1 = dunkl_apply(p, &swapped, 1)?;
    let t2 = dunkl_apply(p, &swapped, 2)?;
    let expected = [(1, t1.sub(&t2).compose_linear(SCALED_ROTATION)), (2, t1.add(&t2).compose_linear(SCALED_ROTATION))];
    for (direction, rhs) in expected {
        let lhs = dunkl_apply(&rotated, kappa, direction)?;
        let diff = lhs.sub(&rhs);
        let first = diff.terms().next().map(|(&e, _)| e);
        if let Some(exponent) = first {
            return Ok(IntertwiningCheck::Fails {
                direction,
                exponent,
                lhs: lhs.coeff(exponent.0, exponent.1),
                rhs: rhs.coeff(exponent.0, exponent.1),
            });
        }
    }
    Ok(IntertwiningCheck::Holds)
}
