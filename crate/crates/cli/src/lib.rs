//! File formats and subcommand logic for the `pgcover` binary.

pub mod commands;
pub mod io;
