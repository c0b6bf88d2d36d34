//! Matrices over `F_q` and over `F_q[x]`.

mod matrix;
mod polymatrix;

pub use matrix::MatrixFq;
pub use polymatrix::{Hnf, MinorsGcd, PolyMatrix};
