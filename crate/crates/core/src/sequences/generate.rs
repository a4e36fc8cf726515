//! Generators for the tau sequences in each coordinate system.

use crate::rings::{Family, LaurentPoly, VarId, ZPoly};

use super::casoratian::{casoratian, odd_members, q_det3};
use super::convert::{check_q_integrality, q_from_t, t_from_q, ConversionTable};
use super::step::step;
use super::xseq::{even_gauge, gen_x, XSequence};
use super::{Relation, SequenceError, TauKind, TauSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QRoute {
    Casoratian,
    /// `det[x_{2j-i}]`.
    Det3,
}

fn start(kind: TauKind, coords: Family) -> TauSequence {
    TauSequence::new(kind, coords, vec![ZPoly::one(), ZPoly::one()])
}

/// Even-gauge `x_0..x_{2n}` together with the gauge table.
pub fn even_x(n: usize) -> Result<(std::collections::BTreeMap<u32, LaurentPoly>, XSequence), SequenceError> {
    even_gauge(&gen_x(2 * n))
}

/// `Q_{-1}..Q_n` in the odd times.
pub fn gen_q_t(n: usize, route: QRoute) -> Result<TauSequence, SequenceError> {
    let (_, xs) = even_x(n)?;
    let mut seq = start(TauKind::Difference, Family::T);
    for k in 1..=n {
        seq.push(match route {
            QRoute::Casoratian => casoratian(&odd_members(&xs, k)),
            QRoute::Det3 => q_det3(&xs, k),
        });
    }
    Ok(seq)
}

/// Both routes, required to agree.
pub fn gen_q_t_checked(n: usize) -> Result<TauSequence, SequenceError> {
    let a = gen_q_t(n, QRoute::Casoratian)?;
    let b = gen_q_t(n, QRoute::Det3)?;
    for k in 1..=n as i64 {
        if a.get(k) != b.get(k) {
            return Err(SequenceError::RouteMismatch { what: "Q_n in t".into(), n: k });
        }
    }
    Ok(a)
}

/// The full conversion table for `k = 1..n`.
pub fn conversion_table(n: usize) -> Result<ConversionTable, SequenceError> {
    let (even_t, _) = even_x(n)?;
    let seq = gen_q_t(n, QRoute::Det3)?;
    let q_of_t = q_from_t(&seq);
    let t_of_q = t_from_q(&q_of_t)?;
    Ok(ConversionTable { q_of_t, t_of_q, even_t })
}

/// `Q_{-1}..Q_n` in the constants `q_k`, with the integrality check.
pub fn gen_q_q(n: usize) -> Result<TauSequence, SequenceError> {
    let seq = gen_q_t(n, QRoute::Det3)?;
    let table = ConversionTable { q_of_t: q_from_t(&seq), t_of_q: t_from_q(&q_from_t(&seq))?, even_t: Default::default() };
    to_q_coordinates(&seq, &table)
}

pub fn to_q_coordinates(seq: &TauSequence, table: &ConversionTable) -> Result<TauSequence, SequenceError> {
    let images = table.t_images();
    let entries = seq.entries().iter().map(|p| p.substitute(&images)).collect::<Result<Vec<_>, _>>()?;
    let out = TauSequence::new(seq.kind, Family::Q, entries);
    check_q_integrality(&out)?;
    Ok(out)
}

/// Runs `relation` from `(1, 1)` with the given constant terms, indexed
/// from `n = 1`.
pub fn chain(
    relation: Relation,
    kind: TauKind,
    coords: Family,
    constants: &[LaurentPoly],
) -> Result<TauSequence, SequenceError> {
    let mut seq = start(kind, coords);
    for (i, c) in constants.iter().enumerate() {
        let n = i as i64 + 1;
        let next = step(relation, seq.get(n - 2), seq.get(n - 1), c, super::step::tau_degree(n), n)?;
        seq.push(next);
    }
    Ok(seq)
}

fn family_constants(family: Family, n: usize) -> Vec<LaurentPoly> {
    (1..=n as u32).map(|k| LaurentPoly::var(VarId::new(family, k))).collect()
}

/// `Q_{-1}..Q_n` in `q`, by repeated difference steps.
pub fn chain_q(n: usize) -> Result<TauSequence, SequenceError> {
    let seq = chain(Relation::Dbch, TauKind::Difference, Family::Q, &family_constants(Family::Q, n))?;
    check_q_integrality(&seq)?;
    Ok(seq)
}

/// `P_{-1}..P_n` in `c`, by repeated differential steps.
pub fn gen_p_c(n: usize) -> Result<TauSequence, SequenceError> {
    let seq = chain(Relation::Bch, TauKind::Classical, Family::C, &family_constants(Family::C, n))?;
    check_q_integrality(&seq)?;
    Ok(seq)
}

/// `R_{-1}..R_n` in `q`, by repeated Dodgson steps with constants
/// `2^{-k(k+1)/2} q_k`.
pub fn chain_r(n: usize) -> Result<TauSequence, SequenceError> {
    let consts: Vec<LaurentPoly> = family_constants(Family::Q, n)
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.scale(&super::dodgson::dodgson_scale(i as i64 + 1)))
        .collect();
    chain(Relation::Dodgson, TauKind::Dodgson, Family::Q, &consts)
}
