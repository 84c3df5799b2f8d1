use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix shape must be at least 1x1, got {rows}x{cols}")]
    EmptyShape { rows: usize, cols: usize },

    #[error("square at ({i}, {j}) with offset {s} does not fit in a {rows}x{cols} matrix")]
    SquareOutOfRange {
        i: usize,
        j: usize,
        s: usize,
        rows: usize,
        cols: usize,
    },

    #[error("cell ({i}, {j}) is outside a {rows}x{cols} matrix")]
    CellOutOfRange {
        i: usize,
        j: usize,
        rows: usize,
        cols: usize,
    },

    #[error("split parameter t = {t} out of range for {rows}x{cols} (need 0 <= t < {})", rows + cols)]
    SplitParamOutOfRange { t: i64, rows: usize, cols: usize },

    #[error("{rows}x{cols} exceeds the search limit of {max} per side")]
    TooLarge { rows: usize, cols: usize, max: usize },

    #[error("brute-force oracle refuses {cells} cells (cap is {cap})")]
    OracleCap { cells: usize, cap: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

/// Position-tagged failure from the matrix text parser. Line and column are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}
