use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("permutation degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("element is not a member of the group")]
    NotMember,

    #[error("subgroup is not contained in the group")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not a {0}-group")]
    NotPGroup(u64),

    #[error("class functions belong to different character tables")]
    TableMismatch,

    #[error("conductor {conductor} does not divide modulus {modulus}")]
    ConductorMismatch { conductor: u64, modulus: u64 },

    #[error("value is not integral at p: {0}")]
    NonIntegral(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A consistency check failed; this is a bug, not a data condition.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Resource caps are reported separately from software failures.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap(_))
    }
}
