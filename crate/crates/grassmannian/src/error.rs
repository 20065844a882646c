use framed::FramedError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrassError {
    #[error("embedding has {found} blocks, expected {expected}")]
    BlockCount { expected: usize, found: usize },
    #[error("embedding block at vertex {vertex} has {found} rows, J has dimension {expected} there")]
    BlockShape { vertex: usize, expected: usize, found: usize },
    #[error("embedding block at vertex {0} is not injective")]
    NotInjective(usize),
    #[error("column span of the embedding is not a submodule of J")]
    NotSubmodule,
    #[error("framing dimensions do not match the injective module")]
    FramingMismatch,
    #[error(transparent)]
    Framed(#[from] FramedError),
}
