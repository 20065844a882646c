//! Quivers whose strongly connected components are simple cycles: detection, the spade quiver Q♠
//! with its module W♠, and the socle criterion for framings with cycle-simple summands.

pub mod decomposition;
mod error;
pub mod roots;
pub mod sample;
pub mod socle;
pub mod spade;

pub use decomposition::{detect_successive, Component, SuccessiveDecomposition};
pub use error::SuccessiveError;
pub use roots::{cycle_char_polys, cycle_operator, cycle_restriction, multi_root_data_of, MultiRootData};
pub use sample::{sample_stable_successive, sample_successive_representation};
pub use socle::{
    ambient_socle_multiplicities, cycle_simple, cyclic_socle_multiplicities, framing_existence_cyclic, SocleReport,
};
pub use spade::{build_spade, fiber_spec, SpadeBundle, SpadeLabel, SpadeVertex};
