use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected_rows}x{expected_cols}, found {rows}x{cols}")]
    DimensionMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("invalid dimensions: {0}")]
    InvalidDimensions(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("matrix is not stochastic")]
    NotStochastic,
    #[error("matrix is not centrosymmetric")]
    NotCentrosymmetric,
    #[error("expected an even number of rows, found {0}")]
    OddRowCount(usize),
    #[error("rectangular permutation matrix is already centrosymmetric")]
    AlreadyCentrosymmetric,
    #[error("expected a (0,1)-matrix with exactly one 1 per row")]
    NotRectPerm,
    #[error("expected a (0,1)-matrix")]
    NotZeroOne,
    #[error("pattern is not centrosymmetric")]
    PatternNotCentrosymmetric,
    #[error("pattern has no row support")]
    NoRowSupport,
    #[error("graph is not a forest")]
    NotForest,
    #[error("enumeration would yield {count} items, above the cap of {cap}")]
    CapExceeded { count: String, cap: u64 },
    #[error("invalid convex combination: {0}")]
    InvalidCombination(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: zero denominator")]
    ZeroDenominator { line: usize },
}

impl Error {
    /// Parse failures are input-format problems; everything else is a domain error.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::ZeroDenominator { .. })
    }
}
