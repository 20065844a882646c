//! Fibers of the framed moduli space over the cyclic quiver: characteristic polynomials of the
//! cycle operators, the Jordan-string modules J(λ, r), and Plücker equations for their submodules.

pub mod embedding;
pub mod equations;
mod error;
pub mod jlambda;
pub mod pluecker;
pub mod sample;
pub mod spec;

pub use embedding::{embed, recover, spectral_projection, spectral_projector};
pub use equations::{
    cyclic_pluecker_equations, format_polynomial, jordan_pluecker_equations, normalize, reduce_by_linear, Coordinate,
    Equation, EquationSet, EquationTag, Monomial, Polynomial, ReducedSystem, VertexAmbient,
};
pub use error::FiberError;
pub use jlambda::{build_j_lambda, fiber_components, flat_position, is_annihilated, FiberAmbient, JLambdaModule, StringLabel};
pub use pluecker::{coordinates_for, evaluate_equations, leading_unit, pluecker_coordinates, PlueckerVector, Residual};
pub use sample::{sample_cyclic_representation, sample_stable_pair};
pub use spec::{char_polys, cycle_quiver, root_data_of, segment_matrix, tau_matrix, validate_root_data, CyclicQuiverSpec, RootData};
