use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad failure class, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad parameters supplied by the caller.
    Usage,
    /// Unreadable or malformed input data.
    Data,
    /// A numerical stage could not produce a valid result.
    Numerical,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("row {row}: expected {expected} fields, found {found}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("row {row}, column {column}: missing value")]
    MissingValue { row: usize, column: usize },

    #[error("row {row}, column {column}: {value:?} is not a finite number")]
    NonNumeric {
        row: usize,
        column: usize,
        value: String,
    },

    #[error("column index {index} out of range for {columns} columns")]
    ColumnOutOfRange { index: usize, columns: usize },

    #[error("fewer than 2 points ({0} rows)")]
    TooFewPoints(usize),

    #[error("point cloud has no feature columns")]
    NoFeatures,

    #[error("epsilon must be positive and finite, got {0}")]
    InvalidEpsilon(f64),

    #[error("matrix has a negative or non-finite entry at ({row}, {col})")]
    InvalidEntry { row: usize, col: usize },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("column {0} sums to zero")]
    ZeroColumn(usize),

    #[error("column {0} does not sum to 1")]
    NotStochastic(usize),

    #[error("column {0} has no off-diagonal mass (isolated point)")]
    IsolatedColumn(usize),

    #[error("matrix power must be at least 1")]
    InvalidPower,

    #[error("filter depth must be at least 2, got {0}")]
    InvalidDepth(usize),

    #[error("transition matrix must be non-lazy (zero diagonal)")]
    LazyChain,

    #[error("filter annihilated {} column(s), first {}", .0.len(), .0[0])]
    Annihilated(Vec<usize>),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("eigenvalue count {count} outside 1..={n}")]
    InvalidEigenCount { count: usize, n: usize },

    #[error("Jacobi iteration did not converge in {sweeps} sweeps")]
    NotConverged { sweeps: usize },

    #[error("graph is disconnected: {near_zero} near-zero eigenvalues")]
    Disconnected { near_zero: usize },

    #[error("embedding dimension must be 2 or 3, got {0}")]
    InvalidDims(usize),

    #[error("expected exactly 2 label classes, found {0}")]
    LabelClasses(usize),

    #[error("probability must lie in [0, 1), got {0}")]
    InvalidProbability(f64),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("requested {requested} edges but only {available} vertex pairs exist")]
    TooManyEdges { requested: usize, available: usize },

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            InvalidEpsilon(_) | InvalidPower | InvalidDepth(_) | InvalidEigenCount { .. }
            | InvalidDims(_) | InvalidProbability(_) | TooManyEdges { .. }
            | InvalidParameter(_) => ErrorKind::Usage,
            Io { .. } | Csv(_) | RaggedRow { .. } | MissingValue { .. } | NonNumeric { .. }
            | ColumnOutOfRange { .. } | TooFewPoints(_) | NoFeatures | LabelClasses(_)
            | IsolatedVertex(_) | EdgeList { .. } | DimensionMismatch { .. } => ErrorKind::Data,
            InvalidEntry { .. } | ZeroColumn(_) | NotStochastic(_) | IsolatedColumn(_) | LazyChain
            | Annihilated(_) | NotSymmetric | NotConverged { .. } | Disconnected { .. } => {
                ErrorKind::Numerical
            }
        }
    }
}
