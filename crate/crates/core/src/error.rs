use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is outside [1, 65536]")]
    InvalidAlphabet(u32),

    #[error("symbol {symbol} is not in the alphabet of size {q}")]
    SymbolOutOfRange { symbol: u32, q: u32 },

    #[error("alphabet mismatch: q={left} vs q={right}")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("index {index} is outside [1, {len}]")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("index set is not strictly ascending")]
    NotAscending,

    #[error("{sub} is not a subsequence of {sup}")]
    NotASubsequence { sub: String, sup: String },

    #[error("cannot delete {s} symbols from a word of length {n}")]
    TooManyDeletions { s: usize, n: usize },

    #[error("{0}")]
    OutsideDomain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("postcondition failed: {0}")]
    Postcondition(String),

    #[error("enumeration of {words} words exceeds the word cap of {cap}")]
    WordCapExceeded { words: String, cap: u64 },

    #[error("cannot parse sequence {text:?}: {reason}")]
    Parse { text: String, reason: String },
}
