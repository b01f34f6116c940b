//! Finite unital rings as operation tables, with exhaustive checks of
//! idempotent-relative reversibility and related properties.

pub mod clock;
pub mod constructions;
pub mod dsl;
pub mod error;
pub mod iso;
pub mod laws;
pub mod predicates;
pub mod report;
pub mod ring;
mod span;

pub use error::{Error, Result};
pub use predicates::{Analysis, Outcome, Property, PropertyVerdict, Witness};
pub use ring::{build_ring, verify_axioms, Element, Guards, RingTable};
