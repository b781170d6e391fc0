use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed ring spec `{spec}`: {reason}")]
    MalformedSpec { spec: String, reason: String },

    #[error("ring of size {size} exceeds the size limit {limit}")]
    RingTooLarge { size: u64, limit: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("ring `{0}` is not local")]
    NotLocal(String),

    #[error("ring `{0}` is not a field")]
    NotAField(String),

    #[error("-1 is not in (R^×)^{p} for R = `{spec}`, so G_R({p}) would be directed")]
    Symmetry { spec: String, p: u64 },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("vertex set must be non-empty")]
    EmptyVertexSet,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("polynomial identity violated: {0}")]
    Falsified(String),

    #[error("graph parse error: {0}")]
    GraphParse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
