use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Validation failures (bad input, violated hypotheses) are kept apart from
/// [`Error::IdentityFailure`], which signals that an identity the library
/// checks at runtime did not hold. The latter always means either a bug or a
/// genuine counterexample, and callers should surface it loudly.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed graph document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("loop at vertex {0}")]
    Loop(String),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(String, String),
    #[error("anti-parallel pair {0} <-> {1}: oriented graphs carry one arrow per edge")]
    AntiParallel(String, String),
    #[error(
        "source vertex {vertex} has weight {weight}; sources must have weight 1 \
         since the edge ideal does not depend on a source's weight"
    )]
    WeightedSource { vertex: String, weight: u32 },
    #[error("vertex {0} has weight 0; weights are positive integers")]
    ZeroWeight(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("invalid vertex name {0:?}")]
    InvalidName(String),
    #[error("graph has {found} vertices, limit is {limit}")]
    TooManyVertices { found: usize, limit: usize },

    #[error("vertex set is not a vertex cover")]
    NotACover,
    #[error("cover {0} is not strong")]
    NotStrong(String),

    #[error("ambient mismatch: {left} vs {right} variables")]
    AmbientMismatch { left: usize, right: usize },
    #[error("the zero ideal has no initial degree")]
    ZeroIdeal,
    #[error("containment violated: {0}")]
    NotContained(String),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("no symbolic-power formula applies; non-minimal strong covers: {}", .offending.join(", "))]
    Unsupported { offending: Vec<String> },
    #[error("graph is not a {family} graph: {reason}")]
    FamilyMismatch { family: String, reason: String },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size limit exceeded: {0}")]
    Limit(String),

    #[error("identity failed: {claim}: {detail}")]
    IdentityFailure { claim: String, detail: String },
}

impl Error {
    pub(crate) fn identity(claim: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::IdentityFailure {
            claim: claim.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
