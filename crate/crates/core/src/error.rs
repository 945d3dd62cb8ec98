use thiserror::Error;

/// Errors produced by graph, word and complex construction.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("label `{0}` does not support element arithmetic")]
    UnsupportedLabel(String),

    #[error("elements belong to different presentations")]
    PresentationMismatch,

    #[error("enumeration is not possible: {0}")]
    NonEnumerable(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
