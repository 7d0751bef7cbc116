//! Scalar abstraction for the exact linear algebra core.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

/// A field scalar. Every algorithm in this crate uses only the four field
/// operations plus exact equality, so the core is generic over the scalar
/// type; the crate-level alias [`crate::Rat`] (arbitrary-precision rational)
/// is the instantiation all pipelines run on.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + FromPrimitive
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + FromPrimitive
{
}

/// Exact conversion from a machine integer.
pub fn from_int<S: Scalar>(n: i64) -> S {
    S::from_i64(n).expect("scalar must represent machine integers")
}
