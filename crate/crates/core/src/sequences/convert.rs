//! Coordinate changes between the times `t_{2k-1}` and the constants `q_k`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::rings::{rat, Family, LaurentPoly, VarId};

use super::{SequenceError, TauSequence};

/// `q_k(t)` and the inverse `t_{2k-1}(q)` for `k = 1..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConversionTable {
    /// `k -> q_k` as a polynomial in the odd times.
    pub q_of_t: BTreeMap<u32, LaurentPoly>,
    /// `2k-1 -> t_{2k-1}` as a Laurent polynomial in the `q`s.
    pub t_of_q: BTreeMap<u32, LaurentPoly>,
    /// `2p -> t_{2p}` in the odd times, from the gauge condition.
    pub even_t: BTreeMap<u32, LaurentPoly>,
}

impl ConversionTable {
    pub fn len(&self) -> usize {
        self.q_of_t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q_of_t.is_empty()
    }

    /// Substitution map `t_{2k-1} -> t_{2k-1}(q)`.
    pub fn t_images(&self) -> BTreeMap<VarId, LaurentPoly> {
        self.t_of_q.iter().map(|(&i, p)| (VarId::t(i), p.clone())).collect()
    }

    /// Substitution map `q_k -> q_k(t)`.
    pub fn q_images(&self) -> BTreeMap<VarId, LaurentPoly> {
        self.q_of_t.iter().map(|(&k, p)| (VarId::q(k), p.clone())).collect()
    }

    /// `t_{2k-1}(q(t)) - t_{2k-1}` and `q_k(t(q)) - q_k`, all of which vanish.
    pub fn round_trip_defects(&self) -> Result<Vec<LaurentPoly>, SequenceError> {
        let (q_img, t_img) = (self.q_images(), self.t_images());
        let mut out = Vec::new();
        for (&i, t) in &self.t_of_q {
            out.push(&t.substitute(&q_img)? - &LaurentPoly::var(VarId::t(i)));
        }
        for (&k, q) in &self.q_of_t {
            out.push(&q.substitute(&t_img)? - &LaurentPoly::var(VarId::q(k)));
        }
        Ok(out)
    }
}

/// The constant terms `q_k = Q_k(0)` of a sequence in `t`-coordinates.
pub fn q_from_t(seq: &TauSequence) -> BTreeMap<u32, LaurentPoly> {
    (1..=seq.max_n()).map(|k| (k as u32, seq.get(k).at_zero())).collect()
}

/// `(-1)^{k+1}/(2k-1)`, the coefficient in `q_k = coef q_{k-2} t_{2k-1} + ...`.
pub fn linear_coefficient(k: u32) -> crate::rings::Rational {
    let sign = if k % 2 == 1 { 1 } else { -1 };
    rat(sign, 2 * k as i64 - 1)
}

/// Inverts `q_k(t)` triangularly: `q_k` is linear in `t_{2k-1}` with
/// coefficient `linear_coefficient(k) q_{k-2}` (`q_{-1} = q_0 = 1`).
pub fn t_from_q(q_of_t: &BTreeMap<u32, LaurentPoly>) -> Result<BTreeMap<u32, LaurentPoly>, SequenceError> {
    let q_or_one = |k: u32| if k == 0 { LaurentPoly::one() } else { LaurentPoly::var(VarId::q(k)) };
    let mut images: BTreeMap<VarId, LaurentPoly> = BTreeMap::new();
    let mut out = BTreeMap::new();
    for (&k, qk) in q_of_t {
        let v = VarId::t(2 * k - 1);
        let (coef, rest) = qk.split_linear(v)?;
        let lower = if k >= 2 { q_of_t.get(&(k - 2)).cloned().unwrap_or_else(LaurentPoly::one) } else { LaurentPoly::one() };
        if coef != lower.scale(&linear_coefficient(k)) {
            return Err(SequenceError::InvalidInput(format!("q_{k} has an unexpected coefficient of {v}")));
        }
        let coef_q = q_or_one(k.saturating_sub(2)).scale(&linear_coefficient(k));
        let rest_q = rest.substitute(&images)?;
        let t = (&LaurentPoly::var(VarId::q(k)) - &rest_q).exact_div(&coef_q)?;
        check_t_integrality(k, &t)?;
        images.insert(v, t.clone());
        out.insert(2 * k - 1, t);
    }
    Ok(out)
}

/// `t_{2k-1}(q)` has integer coefficients, involves `q_1..q_k` only, and
/// negative powers only of `q_1..q_{k-2}`.
fn check_t_integrality(k: u32, t: &LaurentPoly) -> Result<(), SequenceError> {
    let bad = |detail: String| SequenceError::IntegralityViolation { n: k as i64, detail };
    if !t.has_integer_coeffs() {
        return Err(bad(format!("t{} has non-integer coefficients", 2 * k - 1)));
    }
    for (m, _) in t.terms() {
        for &(v, e) in m.exps() {
            if v.family != Family::Q || v.index > k || (e < 0 && v.index + 2 > k) {
                return Err(bad(format!("t{} contains {v}^{e}", 2 * k - 1)));
            }
        }
    }
    Ok(())
}

/// `A_n Q_n` is integral in the `q`s, with negative powers only of
/// `q_1..q_{n-2}`.
pub fn check_q_integrality(seq: &TauSequence) -> Result<(), SequenceError> {
    for n in 1..=seq.max_n() {
        let scaled = seq.get(n).scale_scalar(&crate::rings::Rational::from_integer(seq.normalizer(n)));
        let bad = |detail: String| SequenceError::IntegralityViolation { n, detail };
        if !scaled.has_integer_coeffs() {
            return Err(bad("A_n Q_n has non-integer coefficients".into()));
        }
        for c in scaled.coeffs() {
            for (m, _) in c.terms() {
                for &(v, e) in m.exps() {
                    if v.index as i64 > n || (e < 0 && v.index as i64 + 2 > n) {
                        return Err(bad(format!("Q_{n} contains {v}^{e}")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Leading `z` coefficient of `Q_n`, which is `1/A_n`.
pub fn leading_is_inverse_normalizer(seq: &TauSequence, n: i64) -> bool {
    let lc = seq.get(n).leading_coeff();
    lc.as_constant() == Some(crate::rings::Rational::new(BigInt::from(1), seq.normalizer(n)))
}
