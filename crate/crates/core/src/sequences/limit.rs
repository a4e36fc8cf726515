//! Continuum limit of the difference polynomials.

use crate::rings::{Family, Rational, VarId, ZPoly};

use super::{ConversionTable, SequenceError};

/// Top weight component of `Q_n` (weight `n(n+1)/2`, `w(z) = 1`,
/// `w(t_k) = k`), rewritten in the constants and renamed to `c`.
pub fn continuum_limit(q_t: &ZPoly, n: i64, table: &ConversionTable) -> Result<ZPoly, SequenceError> {
    let top = q_t.weight_component(n * (n + 1) / 2);
    let in_q = top.substitute(&table.t_images())?;
    Ok(in_q.rename_family(Family::Q, Family::C))
}

/// The top weight component alone, still in the times.
pub fn continuum_limit_t(q_t: &ZPoly, n: i64) -> ZPoly {
    q_t.weight_component(n * (n + 1) / 2)
}

/// `T_k = t_{2k+1} / (4^k (2k+1))`; returns the factor `1/(4^k (2k+1))`.
pub fn kdv_time_scale(k: u32) -> Rational {
    let denom = num_bigint::BigInt::from(4).pow(k) * (2 * k + 1);
    Rational::new(1.into(), denom)
}

/// `(T_k, t_{2k+1} scale)` for `k = 0..count`.
pub fn kdv_times(count: u32) -> Vec<(VarId, Rational)> {
    (0..count).map(|k| (VarId::t(2 * k + 1), kdv_time_scale(k))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rat;

    #[test]
    fn time_scales() {
        assert_eq!(kdv_time_scale(0), rat(1, 1));
        assert_eq!(kdv_time_scale(1), rat(1, 12));
        assert_eq!(kdv_time_scale(2), rat(1, 80));
        assert_eq!(kdv_times(2)[1].0, VarId::t(3));
    }
}
