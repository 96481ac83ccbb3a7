//! Library surface of the command-line front end: JSON input parsing, the
//! analysis/normalization/realization pipelines, report serialization, and
//! the built-in example catalog. The `lievf` binary is a thin wrapper.

pub mod catalog;
pub mod input;
pub mod pipeline;
pub mod report;
