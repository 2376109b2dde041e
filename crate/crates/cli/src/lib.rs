//! Config-driven driver: parse a run configuration, solve, and write the
//! solution table, diagnostics and provenance.

pub mod config;
pub mod pipeline;

pub use config::{parse_config, ConfigError, RunConfig};
pub use pipeline::{run, solution_csv, RunOptions, RunOutput};
