//! Command implementations behind the `hyperell` binary.
//!
//! Each command returns a [`commands::Report`] holding a serializable record
//! and its plain-text rendering; the binary picks one.

pub mod commands;
pub mod records;
pub mod table;

pub use commands::Report;
