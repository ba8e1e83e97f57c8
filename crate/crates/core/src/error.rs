use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a chain needs at least one entry")]
    EmptyChain,
    #[error("entries {0:?} do not form a descending chain with step 2")]
    NotAChain(Vec<i64>),
    #[error("chains overlap at entry {0}")]
    Overlap(i64),
    #[error("chains {0:?} and {1:?} are not linked")]
    NotLinked(Vec<i64>, Vec<i64>),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("algorithm violation: {0}")]
    AlgorithmViolation(String),
    #[error("not a scattered parameter: {0}")]
    NotScattered(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("skew shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("spherical family needs a > b > 0 with a + b odd, got a = {a}, b = {b}")]
    InvalidSpherical { a: i64, b: i64 },
    #[error("the base chain {{3, 1}} cannot be reduced further")]
    IrreducibleBase,
    #[error("rank {n} is outside the supported range {min}..={max}")]
    BoundExceeded { n: usize, min: usize, max: usize },
    #[error("malformed input: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl Error {
    /// Process exit code for this error, shared by the CLI and the C ABI.
    ///
    /// 1 verification failure, 2 parse error, 3 invalid chain set, 4 bound exceeded.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse(_) | Error::InvalidPartition(_) | Error::ShapeMismatch(_) => 2,
            Error::EmptyChain
            | Error::NotAChain(_)
            | Error::Overlap(_)
            | Error::NotScattered(_)
            | Error::InvalidSpherical { .. }
            | Error::IrreducibleBase
            | Error::NotLinked(..) => 3,
            Error::BoundExceeded { .. } => 4,
            Error::NotDominant(_)
            | Error::DimensionMismatch { .. }
            | Error::AlgorithmViolation(_) => 1,
        }
    }
}
