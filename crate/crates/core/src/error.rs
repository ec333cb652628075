use thiserror::Error;

use crate::constructions::CherryPair;
use crate::motif::Witness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("not covered: {0}")]
    NotCovered(String),

    #[error("greedy search found {} of {quota} required pairs", found.len())]
    CherryShortfall { found: Vec<CherryPair>, quota: usize },

    #[error("certificate refuted: rainbow {} of length {} found", witness.kind, witness.k)]
    CertificateRefuted { witness: Box<Witness> },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Short machine-readable tag used in JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::Parse { .. } => "invalid-input",
            Error::ResourceLimit(_) => "resource-limit",
            Error::NotCovered(_) => "not-covered",
            Error::CherryShortfall { .. } => "not-found",
            Error::CertificateRefuted { .. } => "certificate-refuted",
            Error::Io(_) => "io",
        }
    }
}
