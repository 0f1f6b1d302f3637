//! Command-line layer over `jackprod-core`: text parsing, the memo cache,
//! verification sweeps, and JSON/CSV/plain-text output.

pub mod cache;
pub mod cli;
pub mod format;
pub mod harness;
pub mod parse;
pub mod report;
