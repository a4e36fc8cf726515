//! Exact arithmetic kernel: rationals, Laurent polynomials in indexed
//! variables, and polynomials in `z` over them.

mod det;
mod error;
mod json;
mod laurent;
mod rational;
mod text;
mod var;
mod zpoly;

pub use det::det_expansion;
pub use error::RingError;
pub use json::{laurent_from_json, laurent_to_json, zpoly_from_json, zpoly_to_json};
pub use laurent::{Laurent, Monomial};
pub use rational::{
    double_factorial_odd, factorial, int, normalizer, parse_rational, rat, rat_arith, valuation, RatOp, Rational,
};
pub use text::{format_rational, parse_laurent, parse_zpoly};
pub use var::{Family, VarId};
pub use zpoly::ZPolyOver;

/// Laurent polynomial with exact rational coefficients.
pub type LaurentPoly = Laurent<Rational>;

/// Polynomial in `z` with exact Laurent coefficients.
pub type ZPoly = ZPolyOver<Rational>;

impl LaurentPoly {
    /// Every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms().all(|(_, c)| c.is_integer())
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> num_bigint::BigInt {
        use num_integer::Integer;
        self.terms().fold(num_bigint::BigInt::from(1), |acc, (_, c)| acc.lcm(c.denom()))
    }
}

impl ZPoly {
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs().iter().all(LaurentPoly::has_integer_coeffs)
    }
}
