use std::fmt::Display;

use crate::rings::{LaurentPoly, Rational, RingError};
use crate::scalar::CommRing;

/// Values a lattice or pyramid cell can hold.
pub trait LatticeCell: CommRing + PartialEq + Display {
    fn from_rational(r: &Rational) -> Self;
    fn exact_div(&self, divisor: &Self) -> Result<Self, RingError>;
}

impl LatticeCell for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self, RingError> {
        if num_traits::Zero::is_zero(divisor) {
            return Err(RingError::DivisionByZero);
        }
        Ok(self / divisor)
    }
}

impl LatticeCell for LaurentPoly {
    fn from_rational(r: &Rational) -> Self {
        LaurentPoly::constant(r.clone())
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self, RingError> {
        LaurentPoly::exact_div(self, divisor)
    }
}
