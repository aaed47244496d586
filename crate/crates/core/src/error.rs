use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors raised by the library.
///
/// Every variant has a stable short name (see [`Error::name`]) which the
/// command line front end prints on stderr.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing, found {prev} followed by {next}")]
    NotWeaklyDecreasing { prev: i64, next: i64 },
    #[error("partition parts must be non-negative, found {0}")]
    NegativePart(i64),
    #[error("cell ({row},{col}) is not in the Young diagram")]
    CellOutOfDiagram { row: usize, col: usize },
    #[error("cannot pad a partition of length {len} to {n} parts")]
    PadTooShort { len: usize, n: usize },
    #[error("row {row} is out of range for a partition of length {len}")]
    RowOutOfRange { row: usize, len: usize },
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("matrix is not square ({rows} rows, {cols} columns)")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix of size {0} exceeds the determinant size bound")]
    MatrixTooLarge(usize),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("hook product does not divide n!")]
    NonIntegral,
    #[error("expected {expected} components, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("generator {0} has non-positive degree")]
    NegativeDegreeGenerator(String),
    #[error("ell must be a positive integer")]
    InvalidEll,
    #[error("graded dimensions did not vanish below degree {0}")]
    NotFiniteDimensional(usize),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("partition {0} does not have trivial core")]
    NontrivialCore(String),
    #[error("cells {0} and {1} share a row or a column")]
    NotTransversal(String, String),
    #[error("relation {0} is not homogeneous")]
    InhomogeneousRelation(String),
}

impl Error {
    /// Stable identifier of the error kind.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotWeaklyDecreasing { .. } => "NotWeaklyDecreasing",
            Error::NegativePart(_) => "NegativePart",
            Error::CellOutOfDiagram { .. } => "CellOutOfDiagram",
            Error::PadTooShort { .. } => "PadTooShort",
            Error::RowOutOfRange { .. } => "RowOutOfRange",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NonSquare { .. } => "NonSquare",
            Error::MatrixTooLarge(_) => "MatrixTooLarge",
            Error::InexactDivision(_) => "InexactDivision",
            Error::NonIntegral => "NonIntegral",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NegativeDegreeGenerator(_) => "NegativeDegreeGenerator",
            Error::InvalidEll => "InvalidEll",
            Error::NotFiniteDimensional(_) => "NotFiniteDimensional",
            Error::Parse { .. } => "ParseError",
            Error::NontrivialCore(_) => "NontrivialCore",
            Error::NotTransversal(..) => "NotTransversal",
            Error::InhomogeneousRelation(_) => "InhomogeneousRelation",
        }
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
