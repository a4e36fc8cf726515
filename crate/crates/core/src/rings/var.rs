use std::fmt;
use std::str::FromStr;

use super::RingError;

/// Coordinate family of an indeterminate.
///
/// `T` are the flow parameters `t_k`, `Q` the difference Cauchy data
/// `q_k = Q_k(0)`, `C` the classical Cauchy data `c_k = P_k(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    T,
    Q,
    C,
}

impl Family {
    pub fn prefix(self) -> char {
        match self {
            Family::T => 't',
            Family::Q => 'q',
            Family::C => 'c',
        }
    }

    pub fn from_prefix(c: char) -> Option<Family> {
        match c {
            't' => Some(Family::T),
            'q' => Some(Family::Q),
            'c' => Some(Family::C),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId {
    pub family: Family,
    pub index: u32,
}

impl VarId {
    pub fn new(family: Family, index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        VarId { family, index }
    }

    pub fn t(index: u32) -> Self {
        Self::new(Family::T, index)
    }

    pub fn q(index: u32) -> Self {
        Self::new(Family::Q, index)
    }

    pub fn c(index: u32) -> Self {
        Self::new(Family::C, index)
    }

    /// Grading weight: `w(t_k) = k`, `w(q_k) = w(c_k) = k(k+1)/2`.
    pub fn weight(self) -> i64 {
        let k = self.index as i64;
        match self.family {
            Family::T => k,
            Family::Q | Family::C => k * (k + 1) / 2,
        }
    }

    pub fn with_family(self, family: Family) -> Self {
        VarId { family, index: self.index }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.prefix(), self.index)
    }
}

impl FromStr for VarId {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RingError::Parse { pos: 0, msg: format!("invalid variable {s:?}") };
        let mut chars = s.chars();
        let family = chars.next().and_then(Family::from_prefix).ok_or_else(err)?;
        let index: u32 = chars.as_str().parse().map_err(|_| err())?;
        if index == 0 {
            return Err(err());
        }
        Ok(VarId { family, index })
    }
}
