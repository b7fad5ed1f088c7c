//! Graph documents, renderings and the `trigrid` command line.

pub mod cli;
pub mod document;
pub mod export;
