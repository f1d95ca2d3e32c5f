use thiserror::Error;

/// Domain errors raised by the algebra and the intersection computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation degree mismatch: {left} vs {right}")]
    CapMismatch { left: u32, right: u32 },

    #[error("series inverse requires constant term 1, found {found}")]
    NotAUnit { found: String },

    #[error("degree {degree} outside 0..={cap}")]
    DegreeOutOfRange { degree: u32, cap: u32 },

    #[error("determinant needs truncation degree {needed}, series has {cap}")]
    InsufficientCap { needed: u32, cap: u32 },

    #[error("not a partition of {expected}: parts sum to {found}")]
    WrongPartitionSum { expected: u32, found: u32 },

    #[error("partition needs {needed} omega generators, only {available} available")]
    TooFewGenerators { needed: usize, available: usize },

    #[error("generator index {index} out of range 1..={max}")]
    GeneratorOutOfRange { index: u32, max: u32 },

    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(u32),

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },

    #[error("partition must have at least one part")]
    EmptyPartition,

    #[error("partition parts must be positive")]
    ZeroPart,

    #[error("malformed partition {text:?}: {reason}")]
    PartitionSyntax { text: String, reason: String },

    #[error("malformed rational {0:?}")]
    RationalSyntax(String),

    #[error("{what} must be positive, got {value}")]
    NotPositive { what: &'static str, value: String },

    #[error("{what} must be non-negative, got {value}")]
    Negative { what: &'static str, value: String },

    #[error("Porteous shape is degenerate: g - d + r = {0} < 1")]
    DegenerateShape(i64),

    #[error("rank r must be at least 1")]
    ZeroRank,

    #[error("length mismatch: {what} has {found} entries, expected {expected}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{0}")]
    InconsistentCase(String),

    #[error("table line {line}: {reason}")]
    TableSyntax { line: usize, reason: String },

    #[error("unknown case {0:?}")]
    UnknownCase(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
