use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported shape {0}: only two-column shapes (2^k,1^(n-2k)) with k >= 1 have a fixed generator scheme; use the full complex for other shapes")]
    UnsupportedShape(String),
    #[error("size cap exceeded: {0}")]
    Capacity(String),
    #[error("consistency failure: {0}")]
    Consistency(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        msg: msg.into(),
    }
}
