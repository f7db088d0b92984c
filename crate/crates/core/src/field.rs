//! Exact scalar fields the polynomial kernel is generic over.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::coefficient::Radical;

/// An exact, ordered subfield of the reals.
///
/// Every operation is exact; there is no rounding anywhere. Implemented for
/// [`BigRational`] and for [`crate::Coefficient`] (the field ℚ(√2,√3)).
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Product without consuming either operand.
    fn mul_ref(&self, rhs: &Self) -> Self;

    fn from_integer(n: i64) -> Self;

    fn from_rational(r: BigRational) -> Self;

    /// `num/den`; panics when `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// The non-negative square root when it lies in the field.
    fn sqrt(&self) -> Option<Self>;

    /// Sign of the real number this element denotes.
    fn sign(&self) -> Ordering;

    /// The rational value when the element is rational.
    fn to_rational(&self) -> Option<BigRational>;

    /// Nonzero rational components on the radical basis `{1, √2, √3, √6}`.
    fn radical_parts(&self) -> Vec<(Radical, BigRational)>;

    /// `q · r`, when the radical `r` lies in the field.
    fn from_radical(r: Radical, q: BigRational) -> Option<Self>;

    fn magnitude(&self) -> Self {
        if self.sign() == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

/// Exact square root of a non-negative integer.
pub(crate) fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a rational, when it is rational.
pub(crate) fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let num = int_sqrt(r.numer())?;
    let den = int_sqrt(r.denom())?;
    Some(BigRational::new(num, den))
}

impl Field for BigRational {
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn from_integer(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn from_rational(r: BigRational) -> Self {
        r
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }

    fn sign(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }

    fn radical_parts(&self) -> Vec<(Radical, BigRational)> {
        if self.is_zero() {
            Vec::new()
        } else {
            vec![(Radical::One, self.clone())]
        }
    }

    fn from_radical(r: Radical, q: BigRational) -> Option<Self> {
        (r == Radical::One || q.is_zero()).then_some(q)
    }
}

/// Convenience for building a rational from machine integers.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_exact_and_inexact() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
        assert_eq!(rational_sqrt(&rat(0, 1)), Some(rat(0, 1)));
    }

    #[test]
    fn rational_inverse_and_sign() {
        assert_eq!(rat(-3, 7).inverse(), Some(rat(-7, 3)));
        assert_eq!(rat(0, 1).inverse(), None);
        assert_eq!(rat(-3, 7).sign(), Ordering::Less);
        assert_eq!(rat(-3, 7).magnitude(), rat(3, 7));
        assert!(BigRational::one().is_one());
    }
}
