//! Command-line front end and file formats for the C4-free tripartite
//! construction. The arithmetic lives in `c4free_core`.

pub mod args;
pub mod commands;
pub mod parallel;
pub mod report;
