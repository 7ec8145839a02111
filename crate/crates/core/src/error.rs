use thiserror::Error;

/// Errors raised by construction, analysis and file handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),

    #[error("field order {0} exceeds the supported maximum of 65536")]
    FieldTooLarge(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("expected a line label and a point label")]
    KindMismatch,

    #[error("{0}")]
    OutOfRange(String),

    #[error("simplicity violation at ({u}, {v}): {reason}")]
    SimplicityViolation {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error("vertex index {index} out of bounds for {n} vertices")]
    IndexOutOfBounds { index: usize, n: usize },

    #[error("graph has {0} vertices; brute-force enumeration is limited to 64")]
    TooLarge(usize),

    #[error("no instantiation of the five-cycle template exists in this graph")]
    TemplateInvalid,

    #[error("graph carries no part partition")]
    MissingPartition,

    #[error("graph has arcs; expected an edge-only graph")]
    HasArcs,

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
