//! Coefficient rings the series engine can run over.
//!
//! Everything is exact: machine integers, big integers and rationals. The only
//! operation that distinguishes integer rings from fields is division, which
//! goes through [`ExactDiv`] so that an integer quotient with a remainder is
//! reported instead of being rounded.

use std::fmt::{Debug, Display};
use std::ops::{AddAssign, MulAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Zero};

/// Division that either is exact or reports failure.
pub trait ExactDiv: Sized {
    /// `self / divisor` if the quotient is representable without rounding.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;
}

macro_rules! exact_div_integer {
    ($($t:ty)*) => ($(
        impl ExactDiv for $t {
            fn exact_div(&self, divisor: &Self) -> Option<Self> {
                if divisor.is_zero() {
                    return None;
                }
                let (q, r) = self.div_rem(divisor);
                r.is_zero().then_some(q)
            }
        }
    )*)
}

exact_div_integer!(i32 i64 i128 BigInt);

impl<T> ExactDiv for Ratio<T>
where
    T: Clone + Integer,
{
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self.clone() / divisor.clone())
        }
    }
}

/// An exact commutative coefficient ring.
pub trait Scalar:
    Num
    + Clone
    + Debug
    + Display
    + Neg<Output = Self>
    + FromPrimitive
    + ExactDiv
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + Send
    + Sync
{
    /// Lift a small non-negative integer into the ring.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count does not fit the coefficient type")
    }
}

impl<T> Scalar for T where
    T: Num
        + Clone
        + Debug
        + Display
        + Neg<Output = T>
        + FromPrimitive
        + ExactDiv
        + for<'a> AddAssign<&'a T>
        + for<'a> SubAssign<&'a T>
        + for<'a> MulAssign<&'a T>
        + Send
        + Sync
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn integer_division_reports_remainder() {
        assert_eq!(7i64.exact_div(&2), None);
        assert_eq!(8i64.exact_div(&2), Some(4));
        assert_eq!((-9i64).exact_div(&3), Some(-3));
        assert_eq!(
            BigInt::from(10).exact_div(&BigInt::from(5)),
            Some(BigInt::from(2))
        );
        assert_eq!(1i32.exact_div(&0), None);
    }

    #[test]
    fn rational_division_is_always_exact() {
        let one = BigRational::from_integer(1.into());
        let three = BigRational::from_integer(3.into());
        assert_eq!(
            one.exact_div(&three),
            Some(BigRational::new(1.into(), 3.into()))
        );
        assert_eq!(one.exact_div(&BigRational::zero()), None);
    }
}
