use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("operation undefined for the zero operator")]
    ZeroOperator,
    #[error("coefficient has a pole at n = {index}")]
    Pole { index: i64 },
    #[error("singular leading coefficient at n = {index}")]
    SingularLeading { index: i64 },
    #[error("evaluation window is empty")]
    EmptyWindow,
    #[error("non-finite value {value} at node {node}")]
    NonFinite { node: usize, value: f64 },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown function '{0}'")]
    UnknownFunction(String),
    #[error("unknown algorithm '{0}'")]
    UnknownAlgorithm(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
