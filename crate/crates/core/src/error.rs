use thiserror::Error;

use crate::arith::PointP1;

/// Errors raised by the cycle engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation needs a nonzero rational function")]
    ZeroFunction,
    #[error("cannot locate the roots of {poly}: irreducible factor of degree {degree} over Q")]
    UnsupportedFactorization { poly: String, degree: usize },
    #[error("radicand must be nonzero")]
    ZeroRadicand,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("curve lies inside the face t{coord} = {value}")]
    FaceContainment { coord: u8, value: &'static str },
    #[error("face t{coord} = {value} meets the curve at parameter {point} in a point outside c0: {reason}")]
    InadmissibleBoundaryPoint {
        coord: u8,
        value: &'static str,
        point: PointP1,
        reason: String,
    },
    #[error("parameter point {0} does not lie over x = 0")]
    NotOverXZero(PointP1),
    #[error("modulus condition fails at parameter point {0}")]
    ModulusViolation(PointP1),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown check id {0}")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
