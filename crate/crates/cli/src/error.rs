use std::process::ExitCode;

use dipaths::colouring::ColouringError;
use dipaths::extraction::{BoundsError, PartitionError};
use dipaths::generate::GenError;
use dipaths::io::ParseError;
use dipaths::verify::VerifyError;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Certificate {
        path: String,
        source: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Generate(#[from] GenError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Serialize)]
struct Record<'a> {
    error: &'a str,
    message: String,
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "IoError",
            CliError::Parse { source, .. } => source.kind(),
            CliError::Certificate { .. } => "CertificateError",
            CliError::Usage(_) => "UsageError",
            CliError::Generate(_) => "InvalidSpec",
            CliError::Bounds(BoundsError::EpsOutOfRange { .. }) => "EpsOutOfRange",
            CliError::Bounds(BoundsError::InvalidN { .. }) => "InvalidN",
            CliError::Partition(e) | CliError::Colouring(ColouringError::Partition(e)) => match e {
                PartitionError::TooManyEdges { .. } => "TooManyEdges",
                PartitionError::InvalidN { .. } => "InvalidN",
            },
            CliError::Colouring(_) => "ColouringError",
            CliError::Verify(_) => "InvalidWitness",
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Colouring(ColouringError::Partition(_)) => ExitCode::from(2),
            CliError::Colouring(_) | CliError::Verify(_) => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }

    /// Single-line JSON error record.
    pub fn to_json(&self) -> String {
        let record = Record {
            error: self.kind(),
            message: self.to_string(),
        };
        serde_json::to_string(&record).expect("serialisable")
    }
}
