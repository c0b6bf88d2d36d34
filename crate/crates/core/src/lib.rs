//! Exact computer algebra for multi-twisted codes over finite fields.
//!
//! The crate builds multi-twisted codes from generator tuples, expands them to
//! explicit linear codes, and checks the structural results about them
//! (direct-sum decomposition, LCD criteria, the minimum-distance rule and
//! three dimension formulas) against brute-force linear algebra.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod decomp;
pub mod dimension;
pub mod error;
pub mod lcd;
pub mod linalg;
pub mod mtcode;

pub use algebra::{Field, FieldElement, Poly};
pub use error::{Error, Result};
pub use linalg::{MatrixFq, PolyMatrix};
pub use mtcode::{ConstituentCode, Distance, LinearCode, MTCode, MTShape};
