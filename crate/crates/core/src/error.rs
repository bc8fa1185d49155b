use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// Carries a chordless cycle of length at least 4, displayed 1-based.
    #[error("graph is not chordal: chordless cycle {}", fmt_cycle(.cycle))]
    NotChordal { cycle: Vec<usize> },

    #[error("numeric error: {message}")]
    Numeric {
        message: String,
        condition: Option<f64>,
    },

    #[error("resource limit: {0}")]
    Resource(String),
}

fn fmt_cycle(cycle: &[usize]) -> String {
    cycle
        .iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join("-")
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
