use alloc::string::String;

use crate::classes::ClassLabel;

/// Everything that can go wrong in the core crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{op}: dimension mismatch between {left:?} and {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("{rows}x{cols} matrix needs {expected} entries, got {got}")]
    EntryCount { rows: usize, cols: usize, expected: usize, got: usize },
    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    EmptyDimension { rows: usize, cols: usize },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("invalid tolerance `{name}`: {value}")]
    InvalidTolerance { name: &'static str, value: f64 },
    #[error("{algorithm} did not converge within {limit} iterations")]
    NoConvergence { algorithm: &'static str, limit: usize },
    #[error("matrix is not Hermitian (relative residual {residual:e})")]
    NotHermitian { residual: f64 },
    #[error("matrix is not orthogonal tripotent")]
    NotThreeOp,
    #[error("eigenvalue {value} is farther than {tol:e} from -1, 0 and 1")]
    UnclassifiableEigenvalue { value: f64, tol: f64 },
    #[error("class {0} has no decomposition criterion; use is_member")]
    UnsupportedLabel(ClassLabel),
    #[error("k must be at least {min}, got {k}")]
    InvalidExponent { k: i64, min: i64 },
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("unknown variant `{variant}` for {theorem}")]
    UnknownVariant { theorem: &'static str, variant: String },
    #[error("{theorem} needs parameter `{name}`")]
    MissingParameter { theorem: &'static str, name: &'static str },
    #[error("{theorem}: side condition {condition} violated")]
    SideCondition { theorem: String, condition: &'static str },
    #[error("diagonal entries must be positive, got {0}")]
    NonPositiveDiagonal(f64),
    #[error("infeasible generator spec: {0}")]
    Infeasible(String),
    #[error("unknown class label or construction `{0}`")]
    UnknownLabel(String),
}

pub type Result<T> = core::result::Result<T, Error>;
