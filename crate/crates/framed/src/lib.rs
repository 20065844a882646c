//! Framed representations (M, f): stability, the extended quiver, characters, framing existence and the null cone.

mod character;
mod error;
mod existence;
mod extended;
mod framed_rep;
mod nullcone;

pub use character::{slope_to_character, Character};
pub use error::FramedError;
pub use existence::framing_existence;
pub use extended::{extend_quiver, extended_to_framed, framed_to_extended, ExtendedQuiver};
pub use framed_rep::{is_stable, FramedRep, FramingVector};
pub use nullcone::{default_cycle_bound, null_cone_membership, product_of_cycles_vanishes};
