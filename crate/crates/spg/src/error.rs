//! Crate-wide error and diagnostic types.

use std::fmt;

use thiserror::Error;

/// Errors produced by parsing, storage, projection, and serialization.
#[derive(Debug, Error)]
pub enum Error {
    /// A syntax error in an input document, located by line and column
    /// (both 1-based).
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    /// A graph name that is not loaded in the store.
    #[error("unknown graph: {0}")]
    UnknownGraph(String),

    /// An invalid triple or pattern constructed through the API.
    #[error("invalid term: {0}")]
    InvalidTerm(String),

    /// Strict-mode projection failure; the diagnostics carry the details.
    #[error("projection failed: {0}")]
    Projection(Diagnostics),

    /// An invalid mapping specification or a mapping/binding mismatch.
    #[error("mapping error: {0}")]
    Mapping(String),

    /// A malformed GDF document.
    #[error("GDF error at line {line}: {message}")]
    Gdf { line: usize, message: String },

    /// An invalid run configuration (CLI or config file).
    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    /// The input line the error points at, when the error is located.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::Syntax { line, .. } | Error::Gdf { line, .. } => Some(*line),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Severity of a single diagnostic finding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Warning,
    Error,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::Warning => write!(f, "warning"),
            Severity::Error => write!(f, "error"),
        }
    }
}

/// One finding raised while projecting or serializing a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    /// Stable machine-readable code, e.g. `incomplete-reification`.
    pub code: &'static str,
    pub message: String,
    /// The offending term or element id, when one exists.
    pub term: Option<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]: {}", self.severity, self.code, self.message)?;
        if let Some(term) = &self.term {
            write!(f, " ({term})")?;
        }
        Ok(())
    }
}

/// An ordered collection of diagnostics accumulated by an operation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    entries: Vec<Diagnostic>,
}

impl Diagnostics {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn warn(&mut self, code: &'static str, message: impl Into<String>, term: Option<String>) {
        self.entries.push(Diagnostic {
            severity: Severity::Warning,
            code,
            message: message.into(),
            term,
        });
    }

    pub fn error(&mut self, code: &'static str, message: impl Into<String>, term: Option<String>) {
        self.entries.push(Diagnostic {
            severity: Severity::Error,
            code,
            message: message.into(),
            term,
        });
    }

    pub fn extend(&mut self, other: Diagnostics) {
        self.entries.extend(other.entries);
    }

    pub fn has_errors(&self) -> bool {
        self.entries.iter().any(|d| d.severity == Severity::Error)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Diagnostic> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for Diagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let errors = self.entries.iter().filter(|d| d.severity == Severity::Error);
        let mut first = true;
        for d in errors {
            if !first {
                write!(f, "; ")?;
            }
            write!(f, "{d}")?;
            first = false;
        }
        if first {
            write!(f, "no errors")?;
        }
        Ok(())
    }
}

impl IntoIterator for Diagnostics {
    type Item = Diagnostic;
    type IntoIter = std::vec::IntoIter<Diagnostic>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}
