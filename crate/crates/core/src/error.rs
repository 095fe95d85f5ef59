use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} cannot be paired with itself")]
    SameVertex(usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("not a permutation of the vertex set")]
    NotAPermutation,
    #[error("unknown structure predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown coloring mode `{0}`")]
    UnknownMode(String),
    #[error("invalid family `{spec}`: {reason}")]
    InvalidFamily { spec: String, reason: String },
    #[error("coloring covers {got} vertices, graph has {expected}")]
    PartialColoring { expected: usize, got: usize },
    #[error("vertex {0} has color 0; colors start at 1")]
    ZeroColor(usize),
    #[error("graph has {n} vertices, exhaustive search is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("color count must be at least 1")]
    ZeroColors,
    #[error("malformed graph input: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
