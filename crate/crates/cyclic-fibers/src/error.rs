use framed::FramedError;
use rep_core::RepError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FiberError {
    #[error("invalid root data: {0}")]
    InvalidRoots(String),
    #[error("cyclic quiver needs at least one vertex")]
    EmptyCycle,
    #[error("expected {expected} per-vertex entries, found {found}")]
    VertexCount { expected: usize, found: usize },
    #[error("multiplicity vector of λ = {0} is zero")]
    ZeroMultiplicity(String),
    #[error("block at vertex {vertex} has {found} rows, the ambient has {expected}")]
    BlockShape { vertex: usize, expected: usize, found: usize },
    #[error("embedding block at vertex {0} is not injective")]
    NotInjective(usize),
    #[error("column span is not a submodule of the ambient")]
    NotSubmodule,
    #[error("subspace at vertex {vertex} has dimension {found}, the equation set expects {expected}")]
    DegreeMismatch { vertex: usize, expected: usize, found: usize },
    #[error("equation set has {expected} vertices, coordinates cover {found}")]
    CoordinateCount { expected: usize, found: usize },
    #[error("Pluecker vector at vertex {0} is zero")]
    ZeroVector(usize),
    #[error("τ at vertex {0} has eigenvalues outside the rationals")]
    IrrationalSpectrum(usize),
    #[error("no stable sample after {0} attempts")]
    NoStableSample(usize),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Framed(#[from] FramedError),
}
