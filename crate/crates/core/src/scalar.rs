//! Scalar types the probability kernels can be evaluated in.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, Num, ToPrimitive};

/// Field-like number type accepted by the closed-form kernels.
///
/// The kernels only add, subtract, multiply, divide and compare, so any
/// ordered field works: `f32`, `f64`, or an exact rational such as
/// [`BigRational`](num_rational::BigRational).
pub trait Scalar:
    Num + Clone + PartialOrd + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync
{
    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("count representable in scalar type")
    }
}

impl<T> Scalar for T where
    T: Num + Clone + PartialOrd + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync
{
}

/// Floating point scalars, required wherever randomness or logarithms enter
/// (the samplers).
pub trait FloatScalar: Scalar + Float {}

impl FloatScalar for f32 {}
impl FloatScalar for f64 {}
