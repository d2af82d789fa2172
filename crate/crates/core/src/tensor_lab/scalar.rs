use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Coefficients for explicit tensors and matrices.
///
/// Everything in this crate is written against this trait; exact rings
/// ([`crate::Rational`], [`crate::Integer`]) give exact ranks, while a float
/// type only makes sense for quick experiments.
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug + PartialEq + Send + Sync {
    fn from_int(v: i64) -> Self;
}

impl<T> Scalar for T
where
    T: Num + Neg<Output = T> + Clone + Debug + PartialEq + Send + Sync + FromPrimitive,
{
    fn from_int(v: i64) -> Self {
        T::from_i64(v).expect("every scalar type represents small integers")
    }
}

/// `(-1)^k` as a scalar.
pub fn sign<F: Scalar>(odd: bool) -> F {
    if odd {
        -F::one()
    } else {
        F::one()
    }
}
