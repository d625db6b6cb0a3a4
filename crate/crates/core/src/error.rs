use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TileError {
    #[error("empty tile")]
    EmptyInput,
    #[error("tile must start and end with a numeral")]
    UntrimmedTile,
    #[error("unexpected character {ch:?} at offset {pos}")]
    BadCharacter { ch: char, pos: usize },
    #[error("numeral offset {offset} outside tile of length {length}")]
    OffsetOutOfRange { offset: usize, length: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `objective=` header")]
    MissingHeader,
    #[error("bad header field `{0}`")]
    BadHeader(String),
    #[error("expected `<count> <pattern>`, got `{0}`")]
    BadTileLine(String),
    #[error(transparent)]
    Tile(#[from] TileError),
    #[error("instance has no tiles")]
    NoTiles,
    #[error("tile of length {length} exceeds padded length {padded}")]
    TileTooLong { length: usize, padded: usize },
    #[error("expected `start=<offset>`, got `{0}`")]
    BadStart(String),
}

/// A parse failure with the 1-based line it occurred on (0 when not line-bound).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(line: usize, kind: impl Into<ParseErrorKind>) -> Self {
        ParseError {
            line,
            kind: kind.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    /// A configured state or search budget would be exceeded.
    #[error("{what}: {states} states exceeds cap {cap}")]
    CapExceeded { what: &'static str, states: u64, cap: u64 },
    #[error("solver requires {0}")]
    Unsupported(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("construction needs {needed} cells, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("no sum-distinct set of size {size} in [0, {bound})")]
    SidonSearchFailed { size: usize, bound: u64 },
}
