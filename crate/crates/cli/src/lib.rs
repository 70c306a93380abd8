//! Batch front end for the monodromy engine: JSON job configs in, JSON
//! reports and CSV tables out.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use commands::{run, Command, Outcome};
pub use config::JobConfig;
pub use error::CliError;
pub use report::{RunReport, Table};
