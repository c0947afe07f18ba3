//! `fracton-lab`: classification queries, thermodynamic tables and fixture
//! validation, rendered as human-readable text, JSON or CSV.

pub mod cli;
pub mod commands;
pub mod error;
pub mod fixtures;
pub mod output;
pub mod request;

pub use cli::Cli;
pub use commands::{run, Outcome, Status};
pub use error::CliError;
pub use output::{Document, Format};
pub use request::CommandRequest;
