use thiserror::Error;

/// Everything that can go wrong between reading a matrix and emitting weights.
///
/// Row and column indices are 0-based; `line` numbers in parse errors are
/// 1-based, as an editor would show them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    // Matrix construction.
    #[error("matrix is not rectangular: {0}")]
    NonRectangular(String),
    #[error("non-finite value at row {row}, column {col}")]
    NonFiniteValue { row: usize, col: usize },
    #[error("need at least 2 alternatives, got {0}")]
    TooFewAlternatives(usize),
    #[error("matrix has no criteria")]
    NoCriteria,
    #[error("duplicate criterion name {0:?}")]
    DuplicateCriterionName(String),
    #[error("bad dimensions {rows}x{cols}: need at least 2 rows and 1 column")]
    BadDims { rows: usize, cols: usize },
    #[error("bad value range [{lo}, {hi}]: need finite lo < hi")]
    BadRange { lo: f64, hi: f64 },

    // Likert conversion.
    #[error("unknown grade {0:?}")]
    UnknownGrade(String),
    #[error("invalid Likert map: {0}")]
    InvalidLikertMap(String),

    // Entropy path.
    #[error("negative entry at row {row}, column {col}: entropy weighting needs nonnegative data")]
    NegativeEntry { row: usize, col: usize },
    #[error("column {0} sums to zero")]
    ZeroColumn(usize),
    #[error("every column is uniform; entropy weights are undefined")]
    AllColumnsUniform,

    // Dispersion path.
    #[error("column {0} has a mean too close to zero for a coefficient of variation")]
    DegenerateMean(usize),
    #[error("every column is constant; dispersion weights are undefined")]
    AllColumnsConstant,

    // Scoring and comparison.
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("need at least 2 observations, got {0}")]
    TooFewObservations(usize),
    #[error("constant vector has no correlation")]
    ConstantVector,

    // Text formats.
    #[error("line {line}, column {col}: {reason}")]
    Parse { line: usize, col: usize, reason: String },
    #[error("line {line}, column {col}: unknown grade {grade:?}")]
    UnknownGradeAt { line: usize, col: usize, grade: String },
    #[error("malformed report: {0}")]
    Report(String),
}

impl Error {
    /// True for errors raised by a weighting method on otherwise valid input.
    pub fn is_method_error(&self) -> bool {
        matches!(
            self,
            Error::NegativeEntry { .. }
                | Error::ZeroColumn(_)
                | Error::AllColumnsUniform
                | Error::DegenerateMean(_)
                | Error::AllColumnsConstant
        )
    }

    /// Variant name without payload, used in one-line diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonRectangular(_) => "NonRectangular",
            Error::NonFiniteValue { .. } => "NonFiniteValue",
            Error::TooFewAlternatives(_) => "TooFewAlternatives",
            Error::NoCriteria => "NoCriteria",
            Error::DuplicateCriterionName(_) => "DuplicateCriterionName",
            Error::BadDims { .. } => "BadDims",
            Error::BadRange { .. } => "BadRange",
            Error::UnknownGrade(_) | Error::UnknownGradeAt { .. } => "UnknownGrade",
            Error::InvalidLikertMap(_) => "InvalidLikertMap",
            Error::NegativeEntry { .. } => "NegativeEntry",
            Error::ZeroColumn(_) => "ZeroColumn",
            Error::AllColumnsUniform => "AllColumnsUniform",
            Error::DegenerateMean(_) => "DegenerateMean",
            Error::AllColumnsConstant => "AllColumnsConstant",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::LengthMismatch(..) => "LengthMismatch",
            Error::TooFewObservations(_) => "TooFewObservations",
            Error::ConstantVector => "ConstantVector",
            Error::Parse { .. } => "ParseError",
            Error::Report(_) => "ReportError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
