//! Input formats, reports and command dispatch for the `coxeter-rh` tool.

pub mod commands;
pub mod families;
pub mod input;

pub use commands::{run, Command, Report};
pub use input::{parse_input, parse_subset, parse_types, Format, InputDocument, ParseError};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Library(#[from] coxeter_rh::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 3 when an instance exceeds what the enumerations support, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(e) if e.is_capacity() => 3,
            _ => 2,
        }
    }
}
