//! Command-line surface over `cxj-core`.
//!
//! Every command produces a [`render::Record`] (or a list of
//! [`table::TableRow`]s), which is then rendered as text, CSV or JSON.
//! Output is assembled in full before anything is written, so a failing
//! command never leaves partial output behind.

pub mod commands;
pub mod literal;
pub mod render;
pub mod table;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cxj_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub use commands::{run, Cli};
