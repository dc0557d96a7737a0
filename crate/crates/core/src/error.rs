use thiserror::Error;

use crate::presentation::WordError;

/// Every failure the library reports. `exit_code` maps them onto the CLI
/// convention: 2 for bad input, 3 for exhausted budgets.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("invalid group spec: {0}")]
    Spec(String),
    #[error("rule {lhs} -> {rhs} does not decrease in shortlex order")]
    NotDecreasing { lhs: String, rhs: String },
    #[error("rewriting system is not confluent: overlap {overlap} reduces to {left} and {right}")]
    NotConfluent {
        overlap: String,
        left: String,
        right: String,
    },
    #[error("vertex cap {cap} exceeded while building a ball of radius {radius}")]
    VertexCap { cap: usize, radius: usize },
    #[error("normal forms are certified up to length {certified}, radius {radius} needs {needed}")]
    ConfluenceBound {
        certified: usize,
        radius: usize,
        needed: usize,
    },
    #[error("vertex {0} is not in the ball")]
    VertexOutOfRange(usize),
    #[error("empty vertex set")]
    EmptySet,
    #[error("{0} is the identity")]
    Trivial(String),
    #[error("subgroup is disconnected at thickness {requested}; smallest connecting thickness is {connecting:?}")]
    Disconnected {
        requested: usize,
        connecting: Option<usize>,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{0}")]
    Budget(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::VertexCap { .. } | Error::Budget(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
