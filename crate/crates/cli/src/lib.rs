//! Text format, command-line surface and verification suite for
//! `hilb4n-core`.

pub mod commands;
pub mod parse;
pub mod verify;

pub use commands::{run, Outcome};
