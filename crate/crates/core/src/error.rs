use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid skew shape: {0}")]
    InvalidSkewShape(String),
    #[error("invalid labeled diagram: {0}")]
    InvalidLabeledDiagram(String),
    #[error("dimension of V must be at least 1")]
    InvalidDimension,
    #[error("{eta} is not a {kind} strip over {lambda}")]
    NotAStrip {
        lambda: String,
        eta: String,
        kind: &'static str,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("guardrail exceeded: {0}")]
    Guardrail(String),
    #[error("integer overflow while computing {0}")]
    Overflow(String),
    #[error("the zero module has no projective dimension")]
    ZeroModule,
    #[error("explicit model disagrees with its character: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
