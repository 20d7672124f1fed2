use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph has loops: {0}")]
    Loops(String),

    #[error("{what} too large: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: String,
        size: usize,
        cap: usize,
    },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("invalid family descriptor `{0}`")]
    Descriptor(String),

    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("odd girth {found} below required {required}")]
    OddGirth { found: String, required: usize },

    #[error("invalid labels: {0}")]
    Labels(String),

    /// A constructive step produced something its proof says is impossible.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub fn cap(what: impl Into<String>, size: usize, cap: usize) -> Self {
        Error::CapExceeded {
            what: what.into(),
            size,
            cap,
        }
    }
}
