use thiserror::Error;

use crate::word::Alphabet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator index {index} outside the {alphabet} alphabet")]
    IndexOutOfRange { index: i64, alphabet: Alphabet },

    #[error("parse error at token {position} (`{token}`): {reason}")]
    Parse {
        position: usize,
        token: String,
        reason: String,
    },

    #[error("automorphism has {got} images but rank {rank}")]
    RankMismatch { rank: u32, got: usize },

    #[error("supplied inverse does not invert the map on generator x{generator}")]
    NotInverse { generator: i32 },

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("no inner power of the automorphism found up to exponent {bound}")]
    NoInnerPower { bound: u32 },

    #[error("split position {pos} invalid for a word of length {len}")]
    InvalidSplit { pos: usize, len: usize },

    #[error("operation needs a non-empty word")]
    EmptyWord,

    #[error("invalid finite action: {0}")]
    InvalidAction(String),

    #[error("context file: {0}")]
    ContextFile(String),
}
