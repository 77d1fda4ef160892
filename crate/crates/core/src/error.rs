use thiserror::Error;

/// Errors surfaced by fallible operations in this crate.
///
/// Violations of arithmetic preconditions (dimension mismatches, indices out
/// of range) panic instead; these variants cover domain errors and parsing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("operator is not Hermitian (order 4 has no XYZ form)")]
    NotHermitian,

    #[error("tableau is not proper")]
    ImproperTableau,

    #[error("tableau kinds do not match")]
    KindMismatch,

    #[error("qubit {0} is already initialized as an auxiliary")]
    ReInitialization(usize),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}
