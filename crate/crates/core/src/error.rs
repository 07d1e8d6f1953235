use alloc::string::String;

use crate::verify::PropertyId;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("word lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("word length {0} is outside 1..=64")]
    WordLength(usize),

    #[error("invalid binary word {0:?}")]
    InvalidWord(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("sequence contains a repeated value")]
    Duplicate,

    #[error("size {n} exceeds the oracle cap of {cap}")]
    OracleCap { n: usize, cap: usize },

    #[error("no base listing of size {0}")]
    BaseSize(usize),

    #[error("permutation {0} is not in the image of psi")]
    NotInImage(String),

    #[error("{property} violated: {detail}")]
    Invariant { property: PropertyId, detail: String },

    #[error("construction invariant violated: {0}")]
    Construction(String),
}
