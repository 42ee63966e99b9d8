use thiserror::Error;

use crate::witness::WitnessReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero input where a nonzero field element is required")]
    ZeroInput,
    #[error("singular matrix (determinant is zero)")]
    Singular,
    #[error("unsupported context: {0}")]
    InvalidContext(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("matrix is not in the congruence subgroup K_{0}")]
    NotInCongruenceSubgroup(u32),
    #[error("target matrix does not have the {0} shape")]
    WrongKind(&'static str),
    #[error("witness construction did not verify")]
    VerificationFailed(Box<WitnessReport>),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
