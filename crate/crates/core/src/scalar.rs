//! Scalar traits for the coefficient rings used throughout the crate.
//!
//! Every algebraic container (Laurent polynomials, polynomials in `z`, dense
//! matrices) is generic over a scalar implementing [`Scalar`]. The exact
//! computations in this crate instantiate them with [`crate::Rational`];
//! machine types such as `f64` or `Ratio<i64>` also satisfy the bounds.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

/// A commutative ring element with the conversions the polynomial code needs.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + FromPrimitive
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer constant representable in scalar")
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Display
        + Zero
        + One
        + FromPrimitive
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// A scalar with division by every nonzero element.
pub trait FieldScalar: Scalar + Div<Output = Self> {}

impl<T> FieldScalar for T where T: Scalar + Div<Output = T> {}

/// Minimal commutative ring interface, used by the division-free determinant.
///
/// Implemented for field scalars as well as for the polynomial types, so a
/// Casoratian over `ZPoly` and a numeric determinant share one expansion.
pub trait CommRing: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

macro_rules! comm_ring_via_scalar {
    ($($t:ty),*) => {$(
        impl CommRing for $t {
            fn zero() -> Self { <$t as Zero>::zero() }
            fn one() -> Self { <$t as One>::one() }
            fn is_zero(&self) -> bool { Zero::is_zero(self) }
            fn add(&self, o: &Self) -> Self { self.clone() + o.clone() }
            fn sub(&self, o: &Self) -> Self { self.clone() - o.clone() }
            fn mul(&self, o: &Self) -> Self { self.clone() * o.clone() }
            fn neg(&self) -> Self { -self.clone() }
        }
    )*};
}

comm_ring_via_scalar!(f32, f64, i64, i128, num_rational::BigRational, num_rational::Rational64);
