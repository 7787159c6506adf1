use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid interval: lower bound {lo} exceeds upper bound {hi}")]
    InvertedInterval { lo: f64, hi: f64 },

    #[error("non-finite value {0}")]
    NonFinite(f64),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error at (row {row}, col {col}): {msg}")]
    Parse { row: usize, col: usize, msg: String },

    #[error("csv error: {0}")]
    Csv(String),

    #[error("duplicate {axis} label {label:?}")]
    DuplicateLabel { axis: &'static str, label: String },

    #[error("column {0:?} not found")]
    MissingColumn(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("column {0:?} is constant (zero standard deviation)")]
    ConstantColumn(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {diff:e}")]
    NotSymmetric { i: usize, j: usize, diff: f64 },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("eigenvalue {lambda:e} is not above the rank tolerance {tol:e}")]
    RankDeficient { lambda: f64, tol: f64 },

    #[error("requested {requested} components but only {available} are available")]
    ComponentsOutOfRange { requested: usize, available: usize },

    #[error("vertex enumeration over {0} coordinates exceeds the limit of 25")]
    TooManyVertices(usize),

    #[error("invalid plot axes ({x}, {y}) for {q} components")]
    AxisOutOfRange { x: usize, y: usize, q: usize },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Process exit status for the command-line front end: 2 for data
    /// errors, 3 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NoConvergence { .. }
            | Error::RankDeficient { .. }
            | Error::NotSymmetric { .. }
            | Error::NotSquare { .. } => 3,
            _ => 2,
        }
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
