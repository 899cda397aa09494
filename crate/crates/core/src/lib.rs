//! Exact computations with hom-Lie structures: the twisted
//! Nijenhuis-Richardson bracket on alternating maps, the twisted big bracket
//! on `Lambda(V (+) V*)`, and verifiers for the algebraic structures built on
//! them.

pub mod big_bracket;
pub mod cochain;
pub mod corpus;
pub mod error;
pub mod exterior;
pub mod instance;
pub mod linalg;
pub mod nijenhuis;
pub mod properties;
pub mod report;
pub mod sampling;
pub mod structures;
pub mod suite;

pub use error::{Error, Result};
