use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a complex needs at least one nonempty face")]
    EmptyComplex,
    #[error("negative vertex id {0}")]
    NegativeVertex(i64),
    #[error("vertex id {0} is not in the label list")]
    UnknownVertex(i64),
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: isize, max: isize },
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("denominator of {0} is not invertible in characteristic {1}")]
    NotInvertible(String, u64),
    #[error("matrix entry ({row}, {col}) out of range for a {rows}x{cols} matrix")]
    IndexOutOfRange { row: usize, col: usize, rows: usize, cols: usize },
    #[error("duplicate matrix entry at ({0}, {1})")]
    DuplicateEntry(usize, usize),
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("chain is not a cycle: its boundary is nonzero on {0:?}")]
    NotACycle(Vec<usize>),
    #[error("inverse system does not vanish in degree {0}; ideal is not artinian within the bound")]
    NotArtinian(usize),
    #[error("Hilbert function mismatch at degree {degree}: direct {direct}, composition formula {formula}")]
    HilbertMismatch { degree: usize, direct: String, formula: String },
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("every trial exceeded the matrix budget of {0} entries")]
    BudgetExceeded(usize),
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
