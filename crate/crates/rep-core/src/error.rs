use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("dimension vector has {found} entries, quiver has {expected} vertices")]
    DimensionCount { expected: usize, found: usize },
    #[error("matrix for arrow {arrow} is {found:?}, expected {expected:?}")]
    ShapeMismatch { arrow: String, expected: (usize, usize), found: (usize, usize) },
    #[error("no matrix given for arrow {0}")]
    MissingArrow(String),
    #[error("matrix given for unknown arrow {0}")]
    UnknownArrow(String),
    #[error("basis at vertex {vertex} has {found} rows, ambient dimension is {expected}")]
    SubspaceShape { vertex: usize, expected: usize, found: usize },
    #[error("relation mentions arrows or endpoints foreign to this quiver")]
    ForeignRelation,
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("could not satisfy the relations: {0}")]
    Infeasible(String),
}
