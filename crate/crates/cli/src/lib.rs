//! Command-line front end for `og10-llv`.

pub mod args;
pub mod commands;
pub mod render;
pub mod report;

pub use args::Cli;
pub use commands::{run, Failure, Outcome, EXIT_FINDING, EXIT_OK, EXIT_USAGE};
pub use report::OutputEnvelope;
