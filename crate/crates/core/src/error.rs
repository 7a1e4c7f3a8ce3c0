use std::io;

use thiserror::Error;

use crate::automata::{Event, Word};

/// Errors reported by the library and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input.
    #[error("input error: {0}")]
    Input(String),

    /// Line-numbered diagnostic from one of the text formats.
    #[error("{file}:{line}: {message}")]
    Parse { file: String, line: usize, message: String },

    /// The specification is not (two-level) conditionally decomposable for
    /// the requested alphabets.
    #[error(
        "{stage}: specification not decomposable, witness \"{witness}\"{}",
        suggestion.as_ref().map(|e| format!(", try adding event {e}")).unwrap_or_default()
    )]
    NotDecomposable {
        stage: String,
        witness: Word,
        suggestion: Option<Event>,
    },

    /// The coobservability verifier refused an instance with too many agents.
    #[error("coobservability verifier limited to {limit} agents, got {agents}")]
    TooManyAgents { agents: usize, limit: usize },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },

    /// A pipeline stage failed; wraps the stage's own error.
    #[error("stage {stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn in_stage(self, stage: &'static str) -> Self {
        match self {
            already @ Error::Stage { .. } => already,
            other => Error::Stage {
                stage,
                source: Box::new(other),
            },
        }
    }

    /// Strips stage wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Stage { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
