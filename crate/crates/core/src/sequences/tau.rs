//! Tau sequences indexed from `n = -1`.

use num_bigint::BigInt;

use crate::rings::{normalizer, Family, ZPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TauKind {
    /// `P_n`, the classical polynomials (derivative relation).
    Classical,
    /// `Q_n`, the difference polynomials.
    Difference,
    /// `R_n = 2^{-n(n+1)/2} Q_n`.
    Dodgson,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TauSequence {
    pub kind: TauKind,
    /// Variable family of the coefficients.
    pub coords: Family,
    /// `entries[i]` is the member with index `n = i - 1`.
    entries: Vec<ZPoly>,
}

impl TauSequence {
    /// `entries` starts at `n = -1`; at least that and `n = 0` are required.
    pub fn new(kind: TauKind, coords: Family, entries: Vec<ZPoly>) -> Self {
        assert!(entries.len() >= 2, "a tau sequence starts with n = -1 and n = 0");
        TauSequence { kind, coords, entries }
    }

    pub fn get(&self, n: i64) -> &ZPoly {
        &self.entries[(n + 1) as usize]
    }

    pub fn max_n(&self) -> i64 {
        self.entries.len() as i64 - 2
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> {
        -1..=self.max_n()
    }

    pub fn entries(&self) -> &[ZPoly] {
        &self.entries
    }

    pub fn push(&mut self, p: ZPoly) {
        self.entries.push(p);
    }

    /// The integer `A_n` making `A_n Q_n` integral (1 for `n <= 0`).
    pub fn normalizer(&self, n: i64) -> BigInt {
        if n <= 0 {
            BigInt::from(1)
        } else {
            normalizer(n as u32)
        }
    }

    pub fn truncated(&self, max_n: i64) -> Self {
        let keep = ((max_n + 2).max(2) as usize).min(self.entries.len());
        TauSequence { kind: self.kind, coords: self.coords, entries: self.entries[..keep].to_vec() }
    }
}
