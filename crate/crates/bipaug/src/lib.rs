//! File formats, benchmarks and the command line for `bipaug-core`.

pub mod bench;
pub mod cli;
pub mod dot;
pub mod format;
pub mod json;

pub use format::{parse_edges, parse_graph, serialize, ParseError, ParseErrorKind};
