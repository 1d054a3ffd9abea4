use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed document: {0}")]
    Schema(String),
    #[error("pairing is not a fixed-point-free involution: {0}")]
    InvalidInvolution(String),
    #[error("rotation does not match incidence: {0}")]
    InvalidRotation(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not bipartite; odd cycle through {}", .witness.join(" "))]
    NonBipartite { witness: Vec<String> },
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("scalars from different coefficient contexts")]
    ScalarContextMismatch,
    #[error("invalid reduction system: {0}")]
    InvalidReductionSystem(String),
    #[error("reduction system does not satisfy the diamond condition")]
    RequiresConfluentSystem,
    #[error("reduction did not terminate within {steps} steps")]
    NonTerminating { steps: usize },
    #[error("irreducible paths exist beyond length {cap}")]
    InfiniteDimensional { cap: usize },
    #[error("subspace is not contained in the ambient span")]
    NotASubspace,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("cochain value is not parallel to its tip: {0}")]
    NonParallelCochain(String),
    #[error("multiplication is not associative: {0}")]
    NonAssociative(String),
}

impl Error {
    /// Stable machine-readable name.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Schema(_) => "SchemaError",
            Error::InvalidInvolution(_) => "InvalidInvolution",
            Error::InvalidRotation(_) => "InvalidRotation",
            Error::Disconnected => "Disconnected",
            Error::NonBipartite { .. } => "NonBipartite",
            Error::InvalidBipartition(_) => "InvalidBipartition",
            Error::InvalidQuiver(_) => "InvalidQuiver",
            Error::Parse(_) => "ParseError",
            Error::ScalarContextMismatch => "ScalarContextMismatch",
            Error::InvalidReductionSystem(_) => "InvalidReductionSystem",
            Error::RequiresConfluentSystem => "RequiresConfluentSystem",
            Error::NonTerminating { .. } => "NonTerminating",
            Error::InfiniteDimensional { .. } => "InfiniteDimensional",
            Error::NotASubspace => "NotASubspace",
            Error::NotApplicable(_) => "NotApplicable",
            Error::NonParallelCochain(_) => "NonParallelCochain",
            Error::NonAssociative(_) => "NonAssociative",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
