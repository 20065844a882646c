//! The injective module J, the embedding Φ of framed representations into it, and Grassmannians of its submodules.

mod dagger;
mod embedding;
mod error;
mod injective;

pub use dagger::{build_dagger, dagger_condition, dagger_report, ArrowDagger, DaggerData};
pub use embedding::{grass_membership, image_of, kernel_phi, phi, recover};
pub use error::GrassError;
pub use injective::{build_injective, label_span, InjectiveLabeling, InjectiveModule, Label};
