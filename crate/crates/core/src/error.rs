use thiserror::Error;

/// Errors raised by the card engine, instance parsers and oracles.
///
/// A verifier *rejection* is not an error: it is reported through
/// [`Verdict`](crate::Verdict). Errors mean the input or the engine itself
/// broke a rule of the physical protocol.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid encoding: E_{len}({pos}) needs 0 <= pos <= len and len >= 1")]
    InvalidEncoding { len: usize, pos: usize },

    #[error("malformed marker: {hearts} hearts in one stack")]
    MalformedMarker { hearts: usize },

    #[error("protocol violation: {0}")]
    ProtocolViolation(String),

    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("oracle refused: {what} = {size} exceeds limit {limit}")]
    OracleLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("insufficient samples: {total} < {needed}")]
    InsufficientSamples { total: u64, needed: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn violation(msg: impl Into<String>) -> Error {
    Error::ProtocolViolation(msg.into())
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
