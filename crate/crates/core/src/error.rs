use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed coloring: {0}")]
    MalformedColoring(String),

    #[error("unsupported domain: {0}")]
    UnsupportedDomain(String),

    #[error("unknown pattern `{name}` (known patterns: {known})")]
    UnknownPattern { name: String, known: String },

    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
