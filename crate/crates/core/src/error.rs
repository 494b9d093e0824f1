use thiserror::Error;

/// Errors raised at the boundary of the tableau and crystal operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("letter {letter} is outside the alphabet [1,{n}]")]
    LetterOutOfRange { letter: u32, n: u32 },

    #[error("row lengths {0:?} do not form a partition")]
    RaggedRows(Vec<usize>),

    #[error("tableau is not semistandard")]
    NotSemistandard,

    #[error("cell ({row},{col}) is not a removable corner")]
    NotRemovable { row: usize, col: usize },

    #[error("crystal index {i} is outside [1,{max}]")]
    IndexOutOfRange { i: u32, max: u32 },

    #[error("{0:?} is not a strictly increasing column")]
    NotAColumn(Vec<u32>),

    #[error("rank n = {0} is too small (need n >= 3)")]
    RankTooSmall(u32),

    #[error("shape of length {len} exceeds the allowed length {max}")]
    ShapeTooLong { len: usize, max: usize },

    #[error("alphabet mismatch: expected n = {expected}, found n = {found}")]
    RankMismatch { expected: u32, found: u32 },

    #[error("invalid oscillating tableau: {0}")]
    InvalidOscillatingTableau(String),

    #[error("invalid Q^AI-symbol: {0}")]
    InvalidQSymbol(String),

    #[error("no word maps to the given (P^AI, oscillating tableau) pair")]
    NoPreimage,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
