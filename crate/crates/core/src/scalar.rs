//! The exact integer scalar the generic algebra is written against.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer: `i64`, `i128` or [`num_bigint::BigInt`].
///
/// Machine integers are accepted for speed in oracles and tests; they carry
/// the usual overflow caveat, so anything sized by factorials goes through
/// `BigInt`.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
    fn of(value: u64) -> Self {
        <Self as FromPrimitive>::from_u64(value).expect("value does not fit the scalar type")
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}
