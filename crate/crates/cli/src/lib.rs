//! Report assembly for the `hyperarr` binary.

pub mod commands;
pub mod report;
