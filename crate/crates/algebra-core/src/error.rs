use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("arrow {arrow} references missing vertex {vertex}")]
    UnknownVertex { arrow: String, vertex: usize },
    #[error("duplicate arrow id {0}")]
    DuplicateArrow(String),
    #[error("unknown arrow id {0}")]
    UnknownArrow(String),
    #[error("arrows {0} do not compose to a path")]
    NotComposable(String),
    #[error("a path needs at least one arrow here")]
    EmptyPath,
    #[error("relation term of length {0}; relations need length at least 2")]
    ShortRelationTerm(usize),
    #[error("nilpotency bound {0} is below 2")]
    BoundTooSmall(usize),
}
