//! Exact computations with the split octonions and the Chevalley group G2.
//!
//! The crate covers the Zorn vector-matrix model of the octonions, the
//! automorphism families θ, γ, δ and their Chevalley structure constants,
//! the derivation algebra, the standard apartment of the building of G2, and
//! the correspondence between apartment points, orders and valuations.

pub mod apartment;
pub mod arith;
pub mod automorphisms;
pub mod chevalley;
pub mod derivations;
pub mod error;
pub mod lattices;
pub mod matrix;
pub mod octonion;
pub mod properties;

pub use error::Error;
