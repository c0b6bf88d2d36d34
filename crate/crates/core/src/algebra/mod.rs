//! Arithmetic in `F_q` and `F_q[x]`.

pub mod field;
pub mod poly;

pub use field::{Field, FieldElement, DEFAULT_MAX_Q};
pub use poly::Poly;
