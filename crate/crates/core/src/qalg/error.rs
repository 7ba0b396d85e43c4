//! Error type for the rational-algebra layer.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QalgError {
    /// The operation is undefined for the given input (e.g. the zero polynomial).
    UndefinedInput(&'static str),
    /// Degrees or shapes degenerate below what the operation requires.
    DegenerateInput(&'static str),
    /// A denominator polynomial is identically zero.
    ZeroDenominator,
}

impl fmt::Display for QalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QalgError::UndefinedInput(m) => write!(f, "undefined input: {}", m),
            QalgError::DegenerateInput(m) => write!(f, "degenerate input: {}", m),
            QalgError::ZeroDenominator => write!(f, "zero denominator polynomial"),
        }
    }
}

impl std::error::Error for QalgError {}
