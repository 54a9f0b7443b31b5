//! Exact integer scalars.
//!
//! Every matrix in the pipeline is generic over [`Scalar`]. `BigInt` is the
//! production choice (see the aliases at the crate root); machine integers
//! such as `i64` are accepted for small inputs and tests, where the caller
//! takes responsibility for overflow.

use std::fmt::{Debug, Display};

use num_bigint::{BigInt, ToBigInt};
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// An exact Euclidean ring element usable as a matrix entry.
pub trait Scalar:
    Clone + Debug + Display + Integer + Signed + FromPrimitive + ToBigInt + Send + Sync
{
    fn from_int(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("scalar cannot represent i64 value")
    }

    fn to_big(&self) -> BigInt {
        self.to_bigint().expect("scalar has no BigInt image")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + Integer + Signed + FromPrimitive + ToBigInt + Send + Sync
{
}

/// gcd over a list, treating zeros as neutral (`gcd(a, 0) = |a|`).
pub fn gcd_all<'a, T: Scalar + 'a>(values: impl IntoIterator<Item = &'a T>) -> T {
    values
        .into_iter()
        .fold(T::zero(), |acc, v| acc.gcd(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_treats_zero_as_neutral() {
        assert_eq!(gcd_all(&[-4i64, 0]), 4);
        assert_eq!(gcd_all(&[-2i64, -4, -6]), 2);
        assert_eq!(gcd_all(&[-2i64, -3]), 1);
        assert_eq!(gcd_all::<i64>(&[]), 0);
    }

    #[test]
    fn bigint_is_a_scalar() {
        let x = <BigInt as Scalar>::from_int(-7);
        assert_eq!(x.to_big(), BigInt::from(-7));
    }
}
