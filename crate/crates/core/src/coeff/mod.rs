//! Exact coefficient arithmetic: ℤ[q], the field ℚ(q), and linear algebra over it.

mod matrix;
mod poly;
mod ratfunc;

pub use matrix::{QMatrix, RFMatrix};
pub use poly::IntPoly;
pub use ratfunc::RatFunc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Arithmetic operation selector for [`rf_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rf_arith(a: &RatFunc, b: &RatFunc, op: ArithOp) -> Result<RatFunc, CoeffError> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}
