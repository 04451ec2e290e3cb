use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a braid needs at least 2 strands, got {0}")]
    InvalidStrandCount(usize),

    #[error("letter {position}: index {index} out of range for {strands} strands (valid: 1..={})", strands - 1)]
    LetterOutOfRange {
        position: usize,
        index: i64,
        strands: usize,
    },

    #[error("letter {position}: zero is not a valid generator index")]
    ZeroLetter { position: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("invalid pure generator l_{{{i},{j}}}: require 1 <= i < j")]
    InvalidPureGenerator { i: usize, j: usize },

    #[error("pure generator l_{{{i},{j}}} does not fit in {strands} strands")]
    PureGeneratorOutOfRange { i: usize, j: usize, strands: usize },

    #[error("an alphabet needs at least 2 symbols, got {0}")]
    AlphabetTooSmall(usize),

    #[error("alphabet size mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },

    #[error("symbol {position}: value {symbol} out of range for alphabet of size {alphabet_size}")]
    SymbolOutOfRange {
        position: usize,
        symbol: usize,
        alphabet_size: usize,
    },

    #[error("string length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("reference string has length {got}, expected {expected}")]
    ReferenceLengthMismatch { expected: usize, got: usize },

    #[error("cost exponent must be a positive finite number, got {0}")]
    InvalidExponent(f64),

    #[error("gain is only defined for N >= 2, got {0}")]
    GainUndefined(usize),

    #[error("enumeration budget exceeded: task needs {required} items, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error(
        "handle reduction exceeded the step ceiling of {limit} (likely an implementation bug)"
    )]
    StepLimitExceeded { limit: u64 },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
