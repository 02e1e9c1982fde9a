use thiserror::Error;

/// Errors raised by graph construction, word handling and the searches.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph must have at least one vertex")]
    EmptyVertexSet,

    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("operation requires a graph with at least one edge")]
    Edgeless,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("word alphabet is not 1..={max}: letter {missing} is missing")]
    AlphabetGap { missing: u32, max: u32 },

    #[error("letter {0} does not occur in the word")]
    LetterAbsent(u32),

    #[error("alternation needs two distinct letters")]
    SameLetter,

    #[error("not a valid pattern: {0}")]
    InvalidPattern(String),

    #[error("input graph is not a tree")]
    NotATree,

    #[error("coloring is not a proper 3-coloring")]
    ImproperColoring,

    #[error("orientation does not cover exactly the edges of its base graph")]
    BadOrientation,

    #[error("{what} = {value} exceeds the ceiling {limit}")]
    CeilingExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
