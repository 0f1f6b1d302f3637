//! Numeric field abstraction shared by the exact and floating-point paths.

use core::fmt::Debug;
use core::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive};

/// Exact rational scalar.
pub type Rational = BigRational;

/// A field element usable by the polynomial and combinatorial routines.
///
/// Implemented for [`f64`] and [`Rational`]. Everything generic over `Scalar`
/// is exact when instantiated with `Rational`.
pub trait Scalar: Clone + Debug + PartialEq + PartialOrd + Num + Neg<Output = Self> {
    fn from_int(n: i64) -> Self;

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn to_f64(&self) -> f64;

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }

    fn powu(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rational {
    fn from_int(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Convenience constructor for `num/den` as an exact rational.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rising factorial `(a)_m = a (a+1) ... (a+m-1)`.
pub fn rising<T: Scalar>(a: &T, m: u32) -> T {
    let mut acc = T::one();
    let mut term = a.clone();
    for _ in 0..m {
        acc = acc * term.clone();
        term = term + T::one();
    }
    acc
}

/// Binomial coefficient as a scalar.
pub fn binomial<T: Scalar>(n: u32, r: u32) -> T {
    if r > n {
        return T::zero();
    }
    let r = r.min(n - r);
    let mut acc = T::one();
    for i in 0..r {
        acc = acc * T::from_int(i64::from(n - i)) / T::from_int(i64::from(i + 1));
    }
    acc
}

pub(crate) fn factorial<T: Scalar>(n: u32) -> T {
    rising(&T::one(), n)
}
