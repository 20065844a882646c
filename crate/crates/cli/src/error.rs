use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed {what}: {source}")]
    Json { what: String, source: serde_json::Error },
    #[error(transparent)]
    Algebra(#[from] algebra_core::AlgebraError),
    #[error(transparent)]
    Rep(#[from] rep_core::RepError),
    #[error(transparent)]
    Framed(#[from] framed::FramedError),
    #[error(transparent)]
    Grass(#[from] grassmannian::GrassError),
    #[error(transparent)]
    Fiber(#[from] cyclic_fibers::FiberError),
    #[error(transparent)]
    Successive(#[from] successive_cycles::SuccessiveError),
}

pub(crate) fn input(message: impl Into<String>) -> CliError {
    CliError::Input(message.into())
}
