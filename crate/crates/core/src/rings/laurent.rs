//! Multivariate Laurent polynomials over a scalar field.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{CommRing, FieldScalar, Scalar};

use super::{Family, RingError, VarId};

/// A Laurent monomial: sorted `(variable, exponent)` pairs with nonzero exponents.
///
/// Ordered graded-lexicographically: total degree first, then the exponent of
/// the smallest variable (in `(family, index)` order), larger exponent wins.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    degree: i64,
    exps: Vec<(VarId, i32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: VarId, e: i32) -> Self {
        Self::from_pairs([(v, e)])
    }

    /// Builds a monomial from arbitrary pairs; repeated variables are combined.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, i32)>) -> Self {
        let mut acc: BTreeMap<VarId, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        let exps: Vec<_> = acc.into_iter().filter(|&(_, e)| e != 0).collect();
        let degree = exps.iter().map(|&(_, e)| e as i64).sum();
        Monomial { degree, exps }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self) -> &[(VarId, i32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarId) -> i32 {
        self.exps
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn is_polynomial(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e > 0)
    }

    pub fn weight(&self) -> i64 {
        self.exps.iter().map(|&(v, e)| v.weight() * e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, 1)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.merge(other, -1)
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            degree: -self.degree,
            exps: self.exps.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            degree: self.degree * k as i64,
            exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    /// True when `other / self` has no negative exponent.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.div_of(other).is_polynomial()
    }

    fn div_of(&self, other: &Monomial) -> Monomial {
        other.div(self)
    }

    /// Componentwise minimum of exponents (missing variables count as zero).
    pub fn meet(&self, other: &Monomial) -> Monomial {
        let vars: BTreeSet<VarId> = self.exps.iter().chain(&other.exps).map(|&(v, _)| v).collect();
        Monomial::from_pairs(vars.into_iter().map(|v| (v, self.exponent(v).min(other.exponent(v)))))
    }

    fn merge(&self, other: &Monomial, sign: i32) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let take = match (self.exps.get(i), other.exps.get(j)) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => unreachable!(),
            };
            match take {
                Ordering::Less => {
                    exps.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    let (v, e) = other.exps[j];
                    exps.push((v, sign * e));
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.exps[i].1 + sign * other.exps[j].1;
                    if e != 0 {
                        exps.push((self.exps[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial { degree: self.degree + sign as i64 * other.degree, exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.exps.get(i), other.exps.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(&(_, a)), None) => return a.cmp(&0),
                    (None, Some(&(_, b))) => return 0.cmp(&b),
                    (Some(&(v, a)), Some(&(w, b))) => match v.cmp(&w) {
                        Ordering::Less => return a.cmp(&0),
                        Ordering::Greater => return 0.cmp(&b),
                        Ordering::Equal => {
                            if a != b {
                                return a.cmp(&b);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite sum of Laurent monomials with nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Default for Laurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Laurent<C> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v, 1), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Laurent { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Monomial::one())
    }

    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Single-term elements are the units of the Laurent ring (over a field).
    pub fn as_monomial(&self) -> Option<(&Monomial, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// No negative exponents anywhere.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.exps().iter().map(|&(v, _)| v)).collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                let s = slot.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { terms: self.terms.iter().map(|(n, a)| (n.mul(m), a.clone() * c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Renames every variable of family `from` into family `to`, keeping indices.
    pub fn rename_family(&self, from: Family, to: Family) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let pairs = m.exps().iter().map(|&(v, e)| (if v.family == from { v.with_family(to) } else { v }, e));
            (Monomial::from_pairs(pairs), c.clone())
        }))
    }

    /// Sum of the terms of total weight exactly `w` (see [`VarId::weight`]).
    pub fn weight_component(&self, w: i64) -> Self {
        Laurent {
            terms: self.terms.iter().filter(|(m, _)| m.weight() == w).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn weights(&self) -> BTreeSet<i64> {
        self.terms.keys().map(Monomial::weight).collect()
    }

    /// Splits `self = coef * v + rest` where neither part involves `v`.
    pub fn split_linear(&self, v: VarId) -> Result<(Self, Self), RingError> {
        let mut coef = Self::zero();
        let mut rest = Self::zero();
        for (m, c) in &self.terms {
            match m.exponent(v) {
                0 => rest.add_term(m.clone(), c.clone()),
                1 => coef.add_term(m.div(&Monomial::var(v, 1)), c.clone()),
                _ => return Err(RingError::NotLinear { var: v.to_string() }),
            }
        }
        Ok((coef, rest))
    }

    /// Sets variables to scalar values; unmapped variables must not occur.
    pub fn eval(&self, value: impl Fn(VarId) -> Option<C>) -> Result<C, RingError>
    where
        C: FieldScalar,
    {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.exps() {
                let x = value(v).ok_or_else(|| RingError::Parse { pos: 0, msg: format!("no value for {v}") })?;
                if e < 0 && x.is_zero() {
                    return Err(RingError::DivisionByZero);
                }
                let mut p = C::one();
                for _ in 0..e.unsigned_abs() {
                    p = p * x.clone();
                }
                t = if e < 0 { t / p } else { t * p };
            }
            acc = acc + t;
        }
        Ok(acc)
    }
}

impl<C: FieldScalar> Laurent<C> {
    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Both operands are shifted by monomials so that they become ordinary
    /// polynomials with no monomial factor, then divided by the multivariate
    /// division algorithm. A nonzero remainder means no Laurent quotient
    /// exists: a variable-free part of the divisor must divide the dividend.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, RingError> {
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if let Some((m, c)) = divisor.as_monomial() {
            return Ok(self.mul_monomial(&m.inv(), &(C::one() / c.clone())));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let shift_b = divisor.min_monomial();
        let shift_a = self.min_monomial();
        let b = divisor.mul_monomial(&shift_b.inv(), &C::one());
        let mut rem = self.mul_monomial(&shift_a.inv(), &C::one());
        let (lm_b, lc_b) = {
            let (m, c) = b.leading_term().expect("nonzero");
            (m.clone(), c.clone())
        };
        let mut quot = Self::zero();
        while let Some((lm_r, lc_r)) = rem.leading_term() {
            if !lm_b.divides(lm_r) {
                return Err(RingError::NotDivisible { dividend: self.to_string(), divisor: divisor.to_string() });
            }
            let m = lm_r.div(&lm_b);
            let c = lc_r.clone() / lc_b.clone();
            rem = &rem - &b.mul_monomial(&m, &c);
            quot.add_term(m, c);
        }
        Ok(quot.mul_monomial(&shift_a.div(&shift_b), &C::one()))
    }

    /// Applies the ring map `v -> images[v]`; unmapped variables are kept.
    ///
    /// Negative powers of a variable whose image is a single term are inverted
    /// directly. Otherwise the denominators are cleared first: the element is
    /// multiplied by the least monomial making those exponents nonnegative,
    /// mapped, and the image of that monomial is divided out exactly.
    pub fn substitute(&self, images: &BTreeMap<VarId, Self>) -> Result<Self, RingError> {
        let mut clear: BTreeMap<VarId, i32> = BTreeMap::new();
        for m in self.terms.keys() {
            for &(v, e) in m.exps() {
                if e < 0 {
                    if let Some(img) = images.get(&v) {
                        if img.as_monomial().is_none() {
                            let slot = clear.entry(v).or_default();
                            *slot = (*slot).max(-e);
                        }
                    }
                }
            }
        }
        let shift = Monomial::from_pairs(clear.iter().map(|(&v, &e)| (v, e)));
        let cleared = self.mul_monomial(&shift, &C::one());

        let mut powers: BTreeMap<(VarId, i32), Self> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, c) in &cleared.terms {
            let mut kept = Vec::new();
            let mut acc = Self::constant(c.clone());
            for &(v, e) in m.exps() {
                match images.get(&v) {
                    None => kept.push((v, e)),
                    Some(img) => {
                        let p = match powers.get(&(v, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = if e >= 0 {
                                    img.pow(e as u32)
                                } else {
                                    let (im, ic) = img.as_monomial().expect("cleared above");
                                    Self::term(im.inv(), C::one() / ic.clone()).pow((-e) as u32)
                                };
                                powers.insert((v, e), p.clone());
                                p
                            }
                        };
                        acc = &acc * &p;
                    }
                }
            }
            out = &out + &acc.mul_monomial(&Monomial::from_pairs(kept), &C::one());
        }
        if shift.is_one() {
            return Ok(out);
        }
        let denom = Self::term(shift, C::one()).substitute(images)?;
        out.exact_div(&denom)
    }

    fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        let first = it.next().cloned().unwrap_or_default();
        it.fold(first, |acc, m| acc.meet(m))
    }
}

impl<C: Scalar> Laurent<C> {
    fn combine(&self, other: &Self, sign: bool) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), if sign { c.clone() } else { -c.clone() });
        }
        out
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(slot) => *slot = slot.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Laurent { terms: acc }
    }
}

impl<C: Scalar> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        self.combine(rhs, true)
    }
}

impl<C: Scalar> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        self.combine(rhs, false)
    }
}

impl<C: Scalar> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        self.product(rhs)
    }
}

impl<C: Scalar> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl<C: Scalar> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: Self) -> Laurent<C> {
        &self + &rhs
    }
}

impl<C: Scalar> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Self) -> Laurent<C> {
        &self - &rhs
    }
}

impl<C: Scalar> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Self) -> Laurent<C> {
        &self * &rhs
    }
}

impl<C: Scalar> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Scalar> CommRing for Laurent<C> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn one() -> Self {
        Laurent::one()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
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
