//! Library side of the `linkage-betti` command-line tool.
//!
//! Each subcommand is a plain function returning an [`OutputRecord`], which
//! renders as an aligned table, CSV, or JSON. Rationals are written as `a/b`
//! strings next to a 12-significant-digit decimal column.

pub mod commands;
pub mod output;
pub mod parse;

pub use commands::{cmd_average, cmd_betti, cmd_convergence, cmd_sample, cmd_slice};
pub use output::{format_decimal, Cell, Format, OutputRecord};
pub use parse::{parse_rational, parse_rational_list};

/// Failure of a command, split by exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Parse(String),
    #[error(transparent)]
    Domain(#[from] linkage_betti_core::Error),
}

impl CliError {
    /// 2 for malformed input, 3 for inputs outside the domain.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}
