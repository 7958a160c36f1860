//! Error types shared across the crate.

use thiserror::Error;

use crate::scalar::Semiring;

/// Errors reported by scalar, matrix, and solver operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropError {
    /// Operand shapes are incompatible for the requested operation.
    #[error("shape mismatch in {op}: {lhs_rows}x{lhs_cols} vs {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    /// Operands live in different semirings.
    #[error("semiring mismatch in {op}: {lhs} vs {rhs}")]
    SemiringMismatch {
        op: &'static str,
        lhs: Semiring,
        rhs: Semiring,
    },

    /// A square matrix was required.
    #[error("{op} requires a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    /// Row or column index out of range.
    #[error("index out of range in {op}: ({row}, {col}) for a {rows}x{cols} matrix")]
    IndexOutOfRange {
        op: &'static str,
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    /// The scalar has no multiplicative inverse (the additive identity never does).
    #[error("not a unit: {0} has no multiplicative inverse")]
    NotAUnit(String),

    /// The epsilon-determinant is the additive identity, so no pseudo-inverse exists.
    #[error("determinant is not a unit: det_eps = {0}")]
    DetNotUnit(String),

    /// A scalar value is not an element of the requested semiring.
    #[error("invalid scalar for {semiring}: {value}")]
    InvalidScalar { semiring: Semiring, value: String },

    /// The reference determinant expansion is capped; use the assignment path.
    #[error("matrix size {n} exceeds the reference expansion cap of {cap}")]
    SizeExceeded { n: usize, cap: usize },

    /// A right-hand side entry was the additive identity where a regular
    /// (fully finite) vector is required.
    #[error("right-hand side is not regular: entry {index} is the additive identity")]
    NonRegular { index: usize },

    /// Preprocessing removed every equation or every variable.
    #[error("degenerate system after preprocessing: {0}")]
    EmptySystem(String),

    /// Columns consisting entirely of the additive identity leave the
    /// corresponding variables without a greatest admissible value.
    #[error("unbounded variables (all-neutral columns): {columns:?}")]
    UnboundedVariable { columns: Vec<usize> },

    /// A reduced system failed its row-consistency check, so no lift exists.
    #[error("reduced system is inconsistent; the original system has no solutions")]
    InconsistentSystem,

    /// Text input could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, TropError>;
