use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid table shape: {0}")]
    Shape(String),

    #[error("decode error: {0}")]
    Decode(String),

    #[error("invalid parameter for {op}: {msg}")]
    Parameter { op: &'static str, msg: String },

    #[error("result order {requested} exceeds size cap {cap}")]
    SizeCap { requested: usize, cap: usize },

    #[error("ideal enumeration needs order <= {cap}, got {order}; use generated_ideals for a partial lattice")]
    IdealCap { order: usize, cap: usize },

    #[error("the given ideal is not prime (product witness {a}*{b})")]
    NotPrime { a: usize, b: usize },

    #[error("unknown property {0:?}")]
    UnknownProperty(String),

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    #[error("census order {order} out of range (1..={cap})")]
    CensusRange { order: usize, cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
