//! The bilinear recurrences and their residuals.

use std::fmt;
use std::str::FromStr;

use crate::rings::{int, ZPoly};

use super::{SequenceError, TauSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `P_{n+1}' P_{n-1} - P_{n+1} P_{n-1}' = P_n^2`.
    Bch,
    /// `Q_{n+1}(z+1) Q_{n-1}(z) - Q_{n+1}(z) Q_{n-1}(z+1) = Q_n(z) Q_n(z+1)`.
    Dbch,
    /// `R_{n+1}(z+1) R_{n-1}(z-1) - R_{n+1}(z-1) R_{n-1}(z+1) = R_n^2`.
    Dodgson,
    /// The same left side with `2 R_n^2` on the right; satisfied by `Q_n`.
    ModifiedDodgson,
}

impl Relation {
    pub const ALL: [Relation; 4] = [Relation::Bch, Relation::Dbch, Relation::Dodgson, Relation::ModifiedDodgson];

    pub fn name(self) -> &'static str {
        match self {
            Relation::Bch => "bch",
            Relation::Dbch => "dbch",
            Relation::Dodgson => "dodgson",
            Relation::ModifiedDodgson => "modified-dodgson",
        }
    }

    /// Left side as a bilinear form in `(next, prev)`.
    pub fn lhs(self, next: &ZPoly, prev: &ZPoly) -> ZPoly {
        match self {
            Relation::Bch => &(&next.derive() * prev) - &(next * &prev.derive()),
            Relation::Dbch => &(&next.shift(1) * prev) - &(next * &prev.shift(1)),
            Relation::Dodgson | Relation::ModifiedDodgson => {
                &(&next.shift(1) * &prev.shift(-1)) - &(&next.shift(-1) * &prev.shift(1))
            }
        }
    }

    pub fn rhs(self, cur: &ZPoly) -> ZPoly {
        match self {
            Relation::Bch | Relation::Dodgson => cur * cur,
            Relation::Dbch => cur * &cur.shift(1),
            Relation::ModifiedDodgson => (cur * cur).scale_scalar(&int(2)),
        }
    }

    /// `lhs - rhs` for the triple `(prev, cur, next)`.
    pub fn residual(self, prev: &ZPoly, cur: &ZPoly, next: &ZPoly) -> ZPoly {
        &self.lhs(next, prev) - &self.rhs(cur)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = SequenceError;
    fn from_str(s: &str) -> Result<Self, SequenceError> {
        Relation::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| SequenceError::InvalidInput(format!("unknown relation {s:?}")))
    }
}

/// Residual of one relation instance, centred at index `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual {
    pub n: i64,
    pub residual: ZPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationReport {
    pub relation: Relation,
    pub residuals: Vec<Residual>,
    /// The three-term identity `(con)`, reported alongside `dbch`.
    pub con: Vec<Residual>,
}

impl RelationReport {
    pub fn holds(&self) -> bool {
        self.residuals.iter().chain(&self.con).all(|r| r.residual.is_zero())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Residual> {
        self.residuals.iter().chain(&self.con).filter(|r| !r.residual.is_zero())
    }
}

/// Checks `relation` at every interior index `0..max_n-1` of `seq`.
pub fn verify_relation(relation: Relation, seq: &TauSequence) -> RelationReport {
    let residuals = (0..seq.max_n())
        .map(|n| Residual { n, residual: relation.residual(seq.get(n - 1), seq.get(n), seq.get(n + 1)) })
        .collect();
    let con = if relation == Relation::Dbch {
        (0..seq.max_n()).map(|n| Residual { n, residual: con_residual(seq, n) }).collect()
    } else {
        Vec::new()
    };
    RelationReport { relation, residuals, con }
}

/// The three-term identity linking `Q_{n+1}, Q_n, Q_{n-1}` under unit shifts.
pub fn con_residual(seq: &TauSequence, n: i64) -> ZPoly {
    let (a, b, c) = (seq.get(n + 1), seq.get(n), seq.get(n - 1));
    let sh = |p: &ZPoly, h: i64| p.shift(h);
    let first = &(&(&sh(a, 1) * &sh(b, -1)) * c) - &(&(a * &sh(b, -1)) * &sh(c, 1));
    let second = &(&(a * &sh(b, 1)) * &sh(c, -1)) - &(&(&sh(a, -1) * &sh(b, 1)) * c);
    &first - &second
}
