//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by constructors and fallible operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A constructor received a NaN or infinite component. Scalars, vectors
    /// and matrices only ever store finite values.
    #[error("{0}: non-finite component")]
    NonFinite(&'static str),

    /// The operation is undefined for the given operand, e.g. the square
    /// root of a negative or purely infinitesimal dual number.
    #[error("{0}")]
    Domain(&'static str),

    /// The operand must be appreciable (nonzero standard part).
    #[error("{0}: standard part is zero")]
    NotAppreciable(&'static str),

    /// Operand dimensions do not conform.
    #[error("{context}: dimension mismatch ({lhs_rows}x{lhs_cols} vs {rhs_rows}x{rhs_cols})")]
    Shape {
        context: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    /// The matrix is not Hermitian within the requested tolerance.
    #[error("matrix is not Hermitian: deviation {deviation:e} exceeds tolerance {tol:e}")]
    NotHermitian { deviation: f64, tol: f64 },

    /// The matrix columns are not orthonormal within the requested tolerance.
    #[error("matrix is not partially unitary: deviation {deviation:e} exceeds tolerance {tol:e}")]
    NotPartiallyUnitary { deviation: f64, tol: f64 },

    /// A vector argument that must be nonzero was zero.
    #[error("{0}: zero vector")]
    ZeroVector(&'static str),

    /// An index or count is out of range.
    #[error("{context}: index {index} out of range (limit {limit})")]
    Index {
        context: &'static str,
        index: usize,
        limit: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
