use thiserror::Error;

/// Errors raised by graph construction, exact algebra and the spectral formulas.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),

    #[error("invalid vertex {0}")]
    InvalidVertex(usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph order {order} exceeds the limit of {limit}")]
    SizeLimitExceeded { order: usize, limit: usize },

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("pocket graph H-u is not isomorphic to H-v for the specified edge {0}-{1}")]
    AsymmetricPocket(usize, usize),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("eigenvector X_s (x) Y_t is the all-ones vector and is excluded")]
    ExcludedEigenvector,

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable kebab-case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::InvalidEdge(..) => "invalid-edge",
            Error::InvalidVertex(_) => "invalid-vertex",
            Error::InvalidInput(_) => "invalid-input",
            Error::SizeLimitExceeded { .. } => "size-limit-exceeded",
            Error::Parse { .. } => "parse",
            Error::AsymmetricPocket(..) => "asymmetric-pocket",
            Error::PreconditionViolation(_) => "precondition-violation",
            Error::ExcludedEigenvector => "excluded-eigenvector",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
