use std::path::PathBuf;

use arcspace_core::{CensusError, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error(transparent)]
    Census(#[from] CensusError),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl CliError {
    /// Process exit status: 2 for bad input, 3 for an unmet precondition,
    /// 4 for a failed exact identity.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_)
            | CliError::Graph(_)
            | CliError::Read { .. }
            | CliError::Write { .. }
            | CliError::Census(CensusError::GeneratorLimit { .. }) => 2,
            CliError::Precondition(_) => 3,
            CliError::Invariant(_) | CliError::Census(_) => 4,
        }
    }
}
