//! Configuration, report formats and subcommands behind the `nco` binary.

pub mod config;
pub mod report;
pub mod run;

pub use config::{parse_config, ConfigError, Format, RunConfig, SweepAxis, SweepParam};
pub use report::emit_report;
pub use run::{execute, Command, Output};
