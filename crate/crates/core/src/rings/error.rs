use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible: {dividend} by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("expression is not linear in {var}")]
    NotLinear { var: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
