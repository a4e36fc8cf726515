//! The constraint `Phi_n` and the rescaling to the Dodgson form.

use num_bigint::BigInt;

use crate::rings::{int, Rational, ZPoly};

use super::{Relation, SequenceError, TauKind, TauSequence};

/// `Q_n(z+1) Q_{n-1}(z-1) + Q_{n-1}(z+1) Q_n(z-1) - 2 Q_{n-1} Q_n`.
pub fn phi(cur: &ZPoly, prev: &ZPoly) -> ZPoly {
    let a = &cur.shift(1) * &prev.shift(-1);
    let b = &prev.shift(1) * &cur.shift(-1);
    &(&a + &b) - &(prev * cur).scale_scalar(&int(2))
}

/// `Phi_0, ..., Phi_{max}` for a sequence.
pub fn phi_all(seq: &TauSequence) -> Vec<ZPoly> {
    (0..=seq.max_n()).map(|n| phi(seq.get(n), seq.get(n - 1))).collect()
}

/// `2^{-n(n+1)/2}`.
pub fn dodgson_scale(n: i64) -> Rational {
    let e = (n * (n + 1) / 2).max(0) as usize;
    Rational::new(BigInt::from(1), BigInt::from(1) << e)
}

/// `R_n = 2^{-n(n+1)/2} Q_n`, after checking the initial constraint
/// `Phi_0 = 0`.
pub fn to_dodgson_r(seq: &TauSequence) -> Result<TauSequence, SequenceError> {
    if seq.kind != TauKind::Difference {
        return Err(SequenceError::InvalidInput("expected a difference sequence Q_n".into()));
    }
    if !phi(seq.get(0), seq.get(-1)).is_zero() {
        return Err(SequenceError::ConstraintViolated);
    }
    let entries = seq.indices().map(|n| seq.get(n).scale_scalar(&dodgson_scale(n))).collect();
    Ok(TauSequence::new(TauKind::Dodgson, seq.coords, entries))
}

/// The relation a sequence of the given kind is expected to satisfy.
pub fn native_relation(kind: TauKind) -> Relation {
    match kind {
        TauKind::Classical => Relation::Bch,
        TauKind::Difference => Relation::Dbch,
        TauKind::Dodgson => Relation::Dodgson,
    }
}
