use thiserror::Error;

/// Errors raised by the symbolic and exact-arithmetic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("box must have at least one row and one column, got {rows}x{cols}")]
    EmptyBox { rows: usize, cols: usize },

    #[error("partition {partition} does not fit in a {rows}x{cols} box")]
    DoesNotFit {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("number of variables differs: {0:?} vs {1:?}")]
    VariableMismatch(Vec<usize>, Vec<usize>),

    #[error("polynomial is not symmetric in its variable block(s)")]
    NotSymmetric,

    #[error("monomial orbit {0} has more parts than the {1} available variables")]
    TooManyParts(String, usize),

    #[error("malformed bundle expression: {0}")]
    MalformedBundle(String),

    #[error("rings differ: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid polarization: {0}")]
    InvalidPolarization(String),

    #[error("class is not homogeneous")]
    NotHomogeneous,

    #[error("class degree {degree} exceeds ring dimension {dim}")]
    DegreeTooLarge { degree: usize, dim: usize },

    #[error("rank bound r = {r} outside 0..={max}")]
    RankOutOfRange { r: usize, max: usize },

    #[error("bundle rank {rank} exceeds ring dimension {dim}")]
    RankExceedsDimension { rank: usize, dim: usize },

    #[error("invalid homogeneous space parameters: {0}")]
    InvalidHomogeneous(String),

    #[error("unknown series row {0:?}")]
    UnknownRow(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("restriction of a maximal-rank 2-form to a 6-space has rank 0")]
    ZeroRestriction,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("linear system has no solution")]
    Inconsistent,

    #[error("point is not on the incidence surface: {0}")]
    NotOnSurface(String),

    #[error("kernel has dimension {dim}, expected 1 (witness {witness})")]
    NonUniqueKernel { dim: usize, witness: String },

    #[error("tensor is not general: {0}")]
    NonGeneral(String),

    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("found only {found} of {wanted} surface points after {attempts} lines")]
    Exhausted {
        found: usize,
        wanted: usize,
        attempts: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
