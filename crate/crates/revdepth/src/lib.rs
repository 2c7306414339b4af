//! IO companion for the reversible-circuit toolkit: file formats, stats
//! serialization, random circuit generation and the `revdepth` CLI plumbing.

pub mod format;
pub mod gen;
pub mod stats;

pub use revdepth_core as core;
