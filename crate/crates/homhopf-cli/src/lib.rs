//! Library surface of the command-line frontend: the structure-file format
//! and the command implementations, exposed so integration tests can build
//! fixtures and inspect outputs directly.

pub mod commands;
pub mod format;
