use thiserror::Error;

use crate::rings::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("division by zero at lattice site ({m}, {n})")]
    ZeroDivision { m: i64, n: i64 },
    #[error("inexact division at lattice site ({m}, {n}): {source}")]
    NotDivisible { m: i64, n: i64, source: RingError },
    #[error("lattice site ({m}, {n}) is not determined by the computed cells")]
    Undetermined { m: i64, n: i64 },
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
