use thiserror::Error;

use crate::rings::RingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("no polynomial solution for index {n}: {reason}")]
    NoPolynomialSolution { n: i64, reason: String },
    #[error("integrality violated for index {n}: {detail}")]
    IntegralityViolation { n: i64, detail: String },
    #[error("initial data violate the constraint Phi_0 = 0")]
    ConstraintViolated,
    #[error("routes disagree for {what} at index {n}")]
    RouteMismatch { what: String, n: i64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
