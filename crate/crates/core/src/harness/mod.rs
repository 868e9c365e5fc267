//! Command-line front end and benchmark suite.

pub mod bench;
pub mod cli;
mod system;

pub use bench::{emit_figures, markdown, measure, run_bench, run_comparison, BenchConfig, BenchRow};
pub use system::{Options, Range, Scheme, System};
