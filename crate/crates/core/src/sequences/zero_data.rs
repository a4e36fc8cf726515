//! The sequence with all constants `q_k = 0`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::rings::{double_factorial_odd, normalizer, Family, LaurentPoly, Rational, VarId, ZPoly};

use super::casoratian::{sym_casoratian, zero_data_odd_powers};
use super::generate::{chain, gen_q_t, QRoute};
use super::{Relation, SequenceError, TauKind, TauSequence};

fn linear(h: i64) -> ZPoly {
    ZPoly::z_plus(Rational::from_integer(h.into()))
}

/// `Q^0_n = (1/(2n-1)!!) prod_{j=1}^n (z + n + 1 - 2j) Q^0_{n-1}`.
pub fn q0_recur(n: usize) -> ZPoly {
    let mut q = ZPoly::one();
    for m in 1..=n as i64 {
        let mut f = ZPoly::one();
        for j in 1..=m {
            f = &f * &linear(m + 1 - 2 * j);
        }
        q = (&f * &q).scale_scalar(&Rational::new(1.into(), double_factorial_odd(m as u32)));
    }
    q
}

/// `A_n^{-1} z^{floor((n+1)/2)} prod_{j=1}^{n-1} (z^2 - j^2)^{floor((n+1-j)/2)}`.
pub fn q0_explicit(n: usize) -> ZPoly {
    let n = n as i64;
    let mut q = ZPoly::one();
    for _ in 0..(n + 1) / 2 {
        q = &q * &ZPoly::z();
    }
    for j in 1..n {
        let factor = &linear(j) * &linear(-j);
        for _ in 0..(n + 1 - j) / 2 {
            q = &q * &factor;
        }
    }
    q.scale_scalar(&Rational::new(1.into(), normalizer(n.max(0) as u32)))
}

/// `Q^0_n`, with both closed forms required to agree.
pub fn q0_closed(n: usize) -> Result<ZPoly, SequenceError> {
    let a = q0_recur(n);
    if a != q0_explicit(n) {
        return Err(SequenceError::RouteMismatch { what: "closed forms of Q^0".into(), n: n as i64 });
    }
    Ok(a)
}

/// `Q^0_{-1}..Q^0_n` by repeated difference steps with zero constants.
pub fn q0_chain(n: usize) -> Result<TauSequence, SequenceError> {
    chain(Relation::Dbch, TauKind::Difference, Family::Q, &vec![LaurentPoly::zero(); n])
}

/// `Q^0_{-1}..Q^0_n` from the Casoratian in the times, evaluated at `t = 0`.
pub fn q0_from_casoratian(n: usize) -> Result<TauSequence, SequenceError> {
    let seq = gen_q_t(n, QRoute::Casoratian)?;
    let zeros: BTreeMap<VarId, LaurentPoly> = (1..=2 * n as u32).map(|i| (VarId::t(i), LaurentPoly::zero())).collect();
    let entries = seq.entries().iter().map(|p| p.substitute(&zeros)).collect::<Result<Vec<_>, _>>()?;
    Ok(TauSequence::new(TauKind::Difference, Family::Q, entries))
}

/// The ratio `C*_n / Q^0_n`, where `C*_n` is the symmetric Casoratian of
/// `z^{2j-1}/(2j-1)!`; fails if the two are not proportional.
pub fn sym_casoratian_constant(n: usize) -> Result<Rational, SequenceError> {
    let c = sym_casoratian(&zero_data_odd_powers(n));
    let q = q0_recur(n);
    let lc = |p: &ZPoly| p.leading_coeff().as_constant().unwrap_or_else(|| Rational::from_integer(BigInt::zero()));
    let ratio = lc(&c) / lc(&q);
    if c != q.scale_scalar(&ratio) {
        return Err(SequenceError::RouteMismatch { what: "symmetric Casoratian".into(), n: n as i64 });
    }
    Ok(ratio)
}

/// `(-2)^{n(n-1)/2}`, the value of [`sym_casoratian_constant`].
pub fn sym_casoratian_constant_formula(n: usize) -> Rational {
    let e = (n * n.saturating_sub(1) / 2) as u32;
    Rational::from_integer(num_traits::pow(BigInt::from(-2), e as usize))
}
