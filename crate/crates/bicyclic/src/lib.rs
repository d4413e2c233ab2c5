//! File formats and the command-line front end for `bicyclic-core`.

pub mod cli;
pub mod format;
pub mod report;
