//! Command-line front end: system files in, JSON records out.

pub mod error;
pub mod expr;
pub mod record;
pub mod run;
pub mod system;

pub use error::CliError;
pub use record::OutputRecord;
pub use run::{execute, main_with_args, Cli, Command};
pub use system::{ParsedSystem, SystemFile};
