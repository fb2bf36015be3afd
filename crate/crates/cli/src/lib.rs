//! Library half of the `qsg` command: the text table format, reports and
//! renderings. `main.rs` only parses arguments and picks exit codes.

pub mod document;
pub mod render;
pub mod report;

pub use document::{emit_table, parse_table, ParseError};
