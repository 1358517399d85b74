use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {what}: {left} vs {right}")]
    DimensionMismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },

    #[error(
        "brute-force solver is capped at t = {cap} but t = {t}; use the optimal assignment backend"
    )]
    CapExceeded { t: usize, cap: usize },

    #[error("invalid cost {value} at ({row}, {col}): entries must be finite and non-negative")]
    InvalidCost { row: usize, col: usize, value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite value {value} in {what}")]
    NonFiniteState { what: &'static str, value: f64 },

    #[error("empty {0}")]
    Empty(&'static str),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("duplicate label {0}")]
    DuplicateLabel(i64),

    #[error("label mismatch: {0}")]
    LabelMismatch(String),

    #[error("parse error at record {record} (line {line}): {message}")]
    Parse {
        record: usize,
        line: u64,
        message: String,
    },

    #[error("inconsistent shape at record {record}: {message}")]
    InconsistentShape { record: usize, message: String },

    #[error("non-finite value at record {record}, column {column}")]
    NonFiniteValue { record: usize, column: usize },

    #[error(
        "time indices must be strictly increasing: {prev} followed by {next} at record {record}"
    )]
    NonIncreasingTime { record: usize, prev: i64, next: i64 },

    #[error("timestep mismatch: missing from truth {missing_in_truth:?}, missing from estimate {missing_in_estimate:?}")]
    TimestepMismatch {
        missing_in_truth: Vec<i64>,
        missing_in_estimate: Vec<i64>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
