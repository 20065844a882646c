use rep_core::RepError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FramedError {
    #[error("framing data has {found} vertices, expected {expected}")]
    VertexCount { expected: usize, found: usize },
    #[error("framing at vertex {vertex} has shape {found:?}, expected {expected:?}")]
    FramingShape { vertex: usize, expected: (usize, usize), found: (usize, usize) },
    #[error("positivity form vanishes on the dimension vector")]
    ZeroPositivity,
    #[error("positivity form has a negative weight at vertex {0}")]
    NegativePositivity(usize),
    #[error("character has {found} weights, expected {expected}")]
    CharacterLength { expected: usize, found: usize },
    #[error("representation is not over the extended quiver")]
    NotExtended,
    #[error(transparent)]
    Rep(#[from] RepError),
}
