//! Representations of quivers over the rationals, graded subspaces and submodule computations.

mod error;
pub mod representation;
pub mod sample;
pub mod subspace;

pub use error::RepError;
pub use representation::{hom_space, DimensionVector, ModuleMap, Representation};
pub use sample::{random_invertible, random_matrix, sample_free, sample_representation};
pub use subspace::{is_subrepresentation, maximal_submodule_in, socle, GradedSubspace};
