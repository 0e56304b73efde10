use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix has no entries")]
    EmptyMatrix,

    #[error("entry count {entries} does not match shape {rows}x{cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        entries: usize,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input list")]
    EmptyInput,

    #[error("configuration has rank 0; its columns span no lattice")]
    RankZero,

    /// The criterion requires a configuration with no point outside every affine relation.
    #[error("{criterion} requires a non-pyramidal configuration; points {apexes:?} lie in no affine relation")]
    Pyramidal {
        criterion: &'static str,
        apexes: Vec<usize>,
    },

    #[error("{criterion} requires a regular configuration (all-ones vector in the row span)")]
    NonRegular { criterion: &'static str },

    #[error("{criterion} requires a configuration without repeated points; columns {first} and {second} coincide")]
    RepeatedColumns {
        criterion: &'static str,
        first: usize,
        second: usize,
    },

    #[error("enumeration over {n} points exceeds the guard of {limit}")]
    EnumerationGuard { n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("rows of the Gale matrix do not sum to zero")]
    GaleRowSumNonzero,

    #[error("columns of the Gale matrix are linearly dependent")]
    GaleDependentColumns,

    #[error("columns of the Gale matrix span a non-saturated lattice (index {index})")]
    GaleNotSaturated { index: String },

    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
}
