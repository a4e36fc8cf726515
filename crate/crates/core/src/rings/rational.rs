//! Arbitrary-precision rationals.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::RingError;

pub type Rational = num_rational::BigRational;

/// Builds `p/q` in lowest terms. Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(a: &Rational, b: &Rational, op: RatOp) -> Result<Rational, RingError> {
    Ok(match op {
        RatOp::Add => a + b,
        RatOp::Sub => a - b,
        RatOp::Mul => a * b,
        RatOp::Div => {
            if b.is_zero() {
                return Err(RingError::DivisionByZero);
            }
            a / b
        }
    })
}

/// Parses `"p"`, `"-p"` or `"p/q"`. The result is normalized.
pub fn parse_rational(s: &str) -> Result<Rational, RingError> {
    let bad = |msg: &str| RingError::Parse { pos: 0, msg: format!("{msg}: {s:?}") };
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad("invalid numerator"))?;
    let den = BigInt::from_str(den).map_err(|_| bad("invalid denominator"))?;
    if den.is_zero() {
        return Err(RingError::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// `(2k-1)!! = 1 * 3 * ... * (2k-1)`, with `(-1)!! = 1`.
pub fn double_factorial_odd(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(2 * j - 1))
}

/// `A_n = prod_{j=1}^n (2j-1)!!`, the common denominator of the n-th tau polynomial.
pub fn normalizer(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * double_factorial_odd(j))
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

/// Exponent of `p` in the factorization of the nonzero integer `v`.
pub fn valuation(v: &BigInt, p: u32) -> u32 {
    let p = BigInt::from(p);
    let mut v = v.abs();
    let mut e = 0;
    while !v.is_zero() && v.is_multiple_of(&p) {
        v /= &p;
        e += 1;
    }
    e
}
