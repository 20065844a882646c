//! Quivers, path algebras with relations, and the exact linear algebra they rest on.

pub mod catalog;
mod error;
pub mod matrix;
pub mod poly;
pub mod quiver;
pub mod quotient;
pub mod scalar;

pub use error::AlgebraError;
pub use matrix::{preimage, span_contains, span_intersection, span_sum, Matrix};
pub use poly::{char_poly, Poly};
pub use quiver::{compose_paths, Arrow, LinComb, Path, Quiver, VertexId};
pub use quotient::{build_quotient_basis, verify_regular_ideal, QuotientAlgebraBasis, RelationSet};
pub use scalar::{format_scalar, int, parse_scalar, ratio, Scalar};
