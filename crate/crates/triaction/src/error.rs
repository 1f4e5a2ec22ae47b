use thiserror::Error;

/// Errors surfaced by the library.
///
/// Variants mirror the failure modes of the individual engines: exact
/// arithmetic, polynomial parsing, the reduction pipeline and the atlas
/// construction. `Internal` and `InternalConsistency` indicate bugs (a
/// construction-time guarantee was violated), never bad user input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error("division is not exact in the local ring: {0}")]
    Divisibility(String),

    #[error("variable error: {0}")]
    Variable(String),

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not a slice: derivation image is {image}")]
    NotASlice { image: String },

    #[error("search budget exhausted: {0}")]
    SearchBudget(String),

    #[error("unsupported splitting: {0}")]
    UnsupportedSplitting(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
