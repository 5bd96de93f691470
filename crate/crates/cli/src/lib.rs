//! Library side of the CLI: the graph file format and report rendering,
//! kept out of main.rs so integration tests can exercise them directly.

pub mod format;
pub mod report;
