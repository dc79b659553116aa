//! Sweep, benchmark and single-vector evaluation behind the `owa` binary.

pub mod bench;
pub mod error;
pub mod eval;
pub mod table;

pub use bench::{run_bench, BenchReport, BenchRow};
pub use error::CliError;
pub use eval::{evaluate, orness_grid, run_sweep, SweepConfig};
pub use table::{Method, Status, SweepRow, SweepTable};
