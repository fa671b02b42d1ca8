use std::fmt;

use thiserror::Error;

use crate::circuit::Diagnostic;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Usage,
    Parse,
    Semantic,
    Internal,
}

/// Where in a text input a parse error was found (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid arity: {0}")]
    InvalidArity(String),
    #[error("incomplete truth table: {0}")]
    IncompleteTable(String),
    #[error("function number {id} out of range for arity {arity}")]
    InvalidFunctionNumber { arity: usize, id: String },
    #[error("refusing to enumerate functions of arity {0} (limit 4)")]
    EnumerationTooLarge(usize),
    #[error("invalid function set: {0}")]
    InvalidFunctionSet(String),
    #[error("inconsistent coverage: {0}")]
    InconsistentCoverage(String),
    #[error("incomplete coverage: address {0} is not covered")]
    IncompleteCoverage(usize),
    #[error("{what} parse error at {at}: {message}")]
    Parse {
        what: &'static str,
        at: Location,
        message: String,
    },
    #[error("{}", format_diagnostics(.0))]
    Semantic(Vec<Diagnostic>),
    #[error("unknown line `{0}`")]
    UnknownLine(String),
    #[error("cyclic circuit through lines {}", .0.join(" -> "))]
    CyclicCircuit(Vec<String>),
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("invalid matrix cell ({row},{col}): {reason}")]
    InvalidCell {
        row: usize,
        col: usize,
        reason: String,
    },
    #[error("repair exhausted in column {column}: {faults} faults, {spares} free spares")]
    RepairExhausted {
        column: usize,
        faults: usize,
        spares: usize,
    },
    #[error("faulty quantum at ({row},{col}) reached on pattern {pattern}")]
    FaultEncountered {
        row: usize,
        col: usize,
        pattern: usize,
    },
    #[error("superposition over {0} inputs exceeds the 16-input limit")]
    SuperpositionTooLarge(usize),
    #[error("primitive driving `{line}` has {arity} inputs; the emulator needs exactly 2")]
    UnsupportedArity { line: String, arity: usize },
    #[error("capacity exceeded: {0}")]
    CapacityExceeded(String),
    #[error("emulator sequencing error: {0}")]
    EmuSequenceError(String),
    #[error("image format error in {file}: {message}")]
    ImageFormat { file: String, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse { .. } | Error::ImageFormat { .. } | Error::Io { .. } => ErrorClass::Parse,
            Error::InternalInvariantViolation(_) | Error::EmuSequenceError(_) => {
                ErrorClass::Internal
            }
            _ => ErrorClass::Semantic,
        }
    }

    pub(crate) fn parse(
        what: &'static str,
        line: usize,
        column: usize,
        message: impl Into<String>,
    ) -> Self {
        Error::Parse {
            what,
            at: Location { line, column },
            message: message.into(),
        }
    }
}

fn format_diagnostics(diags: &[Diagnostic]) -> String {
    diags
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
