use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An exhaustive enumeration was refused because it would be too large.
    #[error("size guard exceeded for {what}: {requested} > {limit}")]
    GuardExceeded {
        what: String,
        requested: u128,
        limit: u128,
    },

    /// A crystal operator `e_j` has no unpaired `j` to raise.
    #[error("crystal operator e_{index} is undefined on {word}")]
    OperatorUndefined { index: u8, word: String },

    #[error("letter {letter} out of range 1..={bound}")]
    LetterOutOfRange { letter: u8, bound: u8 },

    #[error("{0} is not a reduced word for the longest element")]
    NotReducedWord(String),

    #[error("{0} is not a square word")]
    NotSquareWord(String),

    #[error("empty word")]
    EmptyWord,

    /// Polynomial division left a nonzero remainder.
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    /// Reduction modulo a cyclotomic polynomial left a nonconstant residue,
    /// i.e. the value at the root of unity is not an integer.
    #[error("value at primitive {order}-th root of unity is not an integer (residue {residue:?})")]
    NonIntegerValue { order: u64, residue: Vec<BigInt> },

    #[error("set is not closed under the action: {0}")]
    NotClosed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
