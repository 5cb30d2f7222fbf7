use thiserror::Error;

/// Crate-wide error type.
///
/// `InternalInconsistency` deserves a note: several routines re-verify
/// properties that are theorems (a constructed certificate must satisfy
/// its matrix identity, at least one Wonderful-lemma outcome must hold,
/// ...). At desk scale a violation always means an implementation bug,
/// so those paths return this distinct variant carrying a dump of the
/// offending instance instead of a normal negative answer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("input exceeds the {what} limit ({n} > {limit} vertices)")]
    ResourceLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal inconsistency ({context}): {detail}\ninstance: {instance}")]
    InternalInconsistency {
        context: &'static str,
        detail: String,
        /// Hand-rolled text encoding of the offending graph/instance,
        /// suitable for reproducing the failure.
        instance: String,
    },
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Exit code for the CLI: 2 for bad input, 3 for theorem violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Parse { .. } | Error::ResourceLimit { .. } => 2,
            Error::InternalInconsistency { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
