//! Command implementations behind the `mtcodes` binary.
//!
//! Every command returns an [`Outcome`](report::Outcome): a `key = value`
//! report plus the exit status (0 ok, 1 usage, 2 mismatch).

pub mod codefile;
pub mod commands;
pub mod probe;
pub mod report;
pub mod verify;
