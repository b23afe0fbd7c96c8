use thiserror::Error;

/// Errors raised by the combinatorial and algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A composition or partition part was zero or negative. `index` is 1-based.
    #[error("part {index} is {value}; every part must be at least 1")]
    NonPositivePart { index: usize, value: i64 },

    #[error("parts are not weakly decreasing at position {index}")]
    NotAPartition { index: usize },

    #[error("raise index {index} out of range for a composition with {len} parts (need 2 <= i <= {len})")]
    RaiseIndexOutOfRange { index: usize, len: usize },

    #[error("raise at index {index} needs part L_{index} >= 2, found {part}")]
    RaisePartTooSmall { index: usize, part: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    /// The tableau is superstandard, where theta is not defined.
    #[error("superstandard: theta undefined")]
    Superstandard,

    #[error("expected a tableau with exactly two runs, found {runs}")]
    NotTwoRuns { runs: usize },

    #[error("expected a two-row tableau, found {rows} rows")]
    NotTwoRows { rows: usize },

    /// The first two runs after the superstandard prefix themselves form a
    /// superstandard two-row tableau, so the two-run involution has nothing to act on.
    #[error(
        "theta undefined: the first two runs below the {prefix_rows} superstandard row(s) \
         form the superstandard two-row tableau {fragment}"
    )]
    ThetaUndefined {
        prefix_rows: usize,
        fragment: String,
    },

    /// Internal geometric invariant of the two-run extraction failed.
    #[error("two-run fragment is not a straight two-row shape: {0}")]
    FragmentShape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
