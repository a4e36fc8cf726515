//! Univariate polynomials in `z` with Laurent-polynomial coefficients.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{CommRing, FieldScalar, Scalar};

use super::{Family, Laurent, RingError, VarId};

/// `coeffs[i]` is the coefficient of `z^i`; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZPolyOver<C> {
    coeffs: Vec<Laurent<C>>,
}

impl<C: Scalar> Default for ZPolyOver<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> ZPolyOver<C> {
    pub fn zero() -> Self {
        ZPolyOver { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Laurent::one())
    }

    pub fn constant(c: Laurent<C>) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn scalar(c: C) -> Self {
        Self::constant(Laurent::constant(c))
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::from_coeffs(vec![Laurent::zero(), Laurent::one()])
    }

    /// `z + h` for a scalar shift `h`.
    pub fn z_plus(h: C) -> Self {
        Self::from_coeffs(vec![Laurent::constant(h), Laurent::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Laurent<C>>) -> Self {
        while coeffs.last().is_some_and(Laurent::is_zero) {
            coeffs.pop();
        }
        ZPolyOver { coeffs }
    }

    pub fn coeffs(&self) -> &[Laurent<C>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Laurent<C> {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Laurent<C> {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// The value at `z = 0`.
    pub fn at_zero(&self) -> Laurent<C> {
        self.coeff(0)
    }

    pub fn scale(&self, c: &Laurent<C>) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_scalar(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    pub fn map_coeffs(&self, f: impl Fn(&Laurent<C>) -> Laurent<C>) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn try_map_coeffs<E>(&self, f: impl Fn(&Laurent<C>) -> Result<Laurent<C>, E>) -> Result<Self, E> {
        Ok(Self::from_coeffs(self.coeffs.iter().map(f).collect::<Result<_, _>>()?))
    }

    /// Multiplication by `z + h`.
    fn mul_linear(&self, h: &C) -> Self {
        let n = self.coeffs.len();
        let mut out = vec![Laurent::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] = &out[i + 1] + c;
            out[i] = &out[i] + &c.scale(h);
        }
        Self::from_coeffs(out)
    }

    /// `P(z + h)`, by Horner's scheme in `z + h`.
    pub fn shift(&self, h: i64) -> Self {
        if h == 0 {
            return self.clone();
        }
        let h = C::from_int(h);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_linear(&h);
            acc = &acc + &Self::constant(c.clone());
        }
        acc
    }

    /// Forward difference `P(z + 1) - P(z)`.
    pub fn delta(&self) -> Self {
        &self.shift(1) - self
    }

    /// Formal derivative in `z`.
    pub fn derive(&self) -> Self {
        Self::from_coeffs(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.scale(&C::from_int(i as i64))).collect(),
        )
    }

    /// Evaluates at `z = value`, leaving a Laurent polynomial.
    pub fn eval_z(&self, value: &Laurent<C>) -> Laurent<C> {
        let mut acc = Laurent::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn eval_z_int(&self, m: i64) -> Laurent<C> {
        self.eval_z(&Laurent::constant(C::from_int(m)))
    }

    /// Terms of total weight `w`, where `z^i` contributes `i`.
    pub fn weight_component(&self, w: i64) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().map(|(i, c)| c.weight_component(w - i as i64)).collect())
    }

    pub fn max_weight(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.weights().last().map(|w| w + i as i64))
            .max()
    }

    pub fn all_weights(&self) -> Vec<i64> {
        let mut ws: Vec<i64> = self
            .coeffs
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.weights().into_iter().map(move |w| w + i as i64))
            .collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    pub fn rename_family(&self, from: Family, to: Family) -> Self {
        self.map_coeffs(|c| c.rename_family(from, to))
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Laurent::zero();
        Self::from_coeffs(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&zero);
                    let b = other.coeffs.get(i).unwrap_or(&zero);
                    if sign {
                        a + b
                    } else {
                        a - b
                    }
                })
                .collect(),
        )
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Laurent::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Self::from_coeffs(out)
    }
}

impl<C: FieldScalar> ZPolyOver<C> {
    /// Applies a coefficient ring map (see [`Laurent::substitute`]).
    pub fn substitute(&self, images: &BTreeMap<VarId, Laurent<C>>) -> Result<Self, RingError> {
        self.try_map_coeffs(|c| c.substitute(images))
    }

    /// Divides every coefficient exactly by `d`.
    pub fn exact_div_coeffs(&self, d: &Laurent<C>) -> Result<Self, RingError> {
        self.try_map_coeffs(|c| c.exact_div(d))
    }
}

impl<C: Scalar> Add for &ZPolyOver<C> {
    type Output = ZPolyOver<C>;
    fn add(self, rhs: Self) -> ZPolyOver<C> {
        self.combine(rhs, true)
    }
}

impl<C: Scalar> Sub for &ZPolyOver<C> {
    type Output = ZPolyOver<C>;
    fn sub(self, rhs: Self) -> ZPolyOver<C> {
        self.combine(rhs, false)
    }
}

impl<C: Scalar> Mul for &ZPolyOver<C> {
    type Output = ZPolyOver<C>;
    fn mul(self, rhs: Self) -> ZPolyOver<C> {
        self.product(rhs)
    }
}

impl<C: Scalar> Neg for &ZPolyOver<C> {
    type Output = ZPolyOver<C>;
    fn neg(self) -> ZPolyOver<C> {
        self.map_coeffs(|c| -c)
    }
}

impl<C: Scalar> Add for ZPolyOver<C> {
    type Output = ZPolyOver<C>;
    fn add(self, rhs: Self) -> ZPolyOver<C> {
        &self + &rhs
    }
}

impl<C: Scalar> Sub for ZPolyOver<C> {
    type Output = ZPolyOver<C>;
    fn sub(self, rhs: Self) -> ZPolyOver<C> {
        &self - &rhs
    }
}

impl<C: Scalar> Mul for ZPolyOver<C> {
    type Output = ZPolyOver<C>;
    fn mul(self, rhs: Self) -> ZPolyOver<C> {
        &self * &rhs
    }
}

impl<C: Scalar> Neg for ZPolyOver<C> {
    type Output = ZPolyOver<C>;
    fn neg(self) -> ZPolyOver<C> {
        -&self
    }
}

impl<C: Scalar> CommRing for ZPolyOver<C> {
    fn zero() -> Self {
        ZPolyOver::zero()
    }
    fn one() -> Self {
        ZPolyOver::one()
    }
    fn is_zero(&self) -> bool {
        ZPolyOver::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
}
