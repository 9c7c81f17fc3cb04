use thiserror::Error;

/// Errors raised by the edit-path algebra and the distance computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `apply` fell through to the undefined branch at the given 1-based letter index.
    #[error("edit path is not valid for the word: mismatch at letter {index}")]
    InvalidPath { index: usize },

    #[error("blank letter at position {index} is only valid inside compositions")]
    BlankInPath { index: usize },

    #[error("core and side alphabets must be pairwise disjoint (symbol {symbol:?} is shared)")]
    OverlappingAlphabets { symbol: char },

    /// The composition reached the `otherwise` case. Indices are 1-based positions
    /// into the two input paths; a position one past the end means that path was exhausted.
    #[error("paths are not composable at p12[{left}], p23[{right}]")]
    Undefined { left: usize, right: usize },

    #[error("search frontier exceeded the node cap of {cap}")]
    SearchBudgetExceeded { cap: usize },

    #[error("enumeration budget exceeded: {needed} items requested, cap is {cap}")]
    BudgetExceeded { needed: u128, cap: u128 },

    #[error("word of length {len} exceeds the limit of {limit}")]
    WordTooLong { len: usize, limit: usize },

    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
