use cyclic_fibers::FiberError;
use framed::FramedError;
use rep_core::RepError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuccessiveError {
    #[error("not a successive-cycle quiver: component {vertices:?} is not a simple cycle")]
    NotSuccessive { vertices: Vec<usize> },
    #[error("expected {expected} per-vertex entries, found {found}")]
    VertexCount { expected: usize, found: usize },
    #[error("expected root data for {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("invalid root data for component {component}: {reason}")]
    InvalidRoots { component: usize, reason: String },
    #[error("cycle operator at vertex {0} has eigenvalues outside the rationals")]
    IrrationalSpectrum(usize),
    #[error("block at spade vertex {vertex} has {found} rows, W♠ has {expected}")]
    BlockShape { vertex: usize, expected: usize, found: usize },
    #[error("subspace has dimension vector {found:?}, expected {expected:?}")]
    DimensionMismatch { expected: Vec<usize>, found: Vec<usize> },
    #[error("column span is not a submodule of W♠")]
    NotSubmodule,
    #[error("characteristic polynomials differ from the root data")]
    CharPolyMismatch,
    #[error("no stable sample after {0} attempts")]
    NoStableSample(usize),
    #[error(transparent)]
    Fiber(#[from] FiberError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Framed(#[from] FramedError),
}
