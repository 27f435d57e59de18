use thiserror::Error;

use crate::poly::PolyError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("degree must be at least 1, got {0}")]
    ZeroDegree(usize),
    #[error("need at least {need} ground variables for degree {n}, got {got}")]
    TooFewVariables { n: usize, need: usize, got: usize },
    #[error("flavor or degree mismatch: expansion is {expected}, numbers are {found}")]
    Mismatch { expected: String, found: String },
    #[error("missing characteristic number for partition {0}")]
    MissingPartition(String),
    #[error("unexpected partition key {0}")]
    UnexpectedPartition(String),
    #[error("invalid characteristic-number input: {0}")]
    BadInput(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("branching data gives odd Euler characteristic {0}")]
    OddEulerCharacteristic(String),
    #[error("branching data gives negative genus {0}")]
    NegativeGenus(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
