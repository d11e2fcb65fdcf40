use std::path::PathBuf;

use symdef_core::asymptotics::FitError;
use symdef_core::Error;
use thiserror::Error;

pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_INPUT: u8 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Core(#[from] Error),

    #[error(transparent)]
    Fit(#[from] FitError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::ResourceCap { .. })
            | CliError::Core(Error::TooLargeForExhaustiveCheck { .. })
            | CliError::Core(Error::ExponentOverflow) => EXIT_RESOURCE,
            _ => EXIT_INPUT,
        }
    }
}
