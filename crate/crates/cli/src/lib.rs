//! Command-line front end for repeat-voting experiments: scenario files,
//! seed control and report encoding.

pub mod app;
pub mod config;
pub mod report;

pub use app::{execute, Cli, CliError, Command, RunArgs};
pub use config::{
    expand_sweep, parse_config, parse_config_str, to_config_string, ConfigError, GridPoint,
};
pub use report::{emit_report, write_records, Format, OutputRecord, ReportError};
