use thiserror::Error;

/// Failure modes shared by every module of the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("pole at u = 0 after cancelling common powers of u")]
    PoleAtZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("matrix is singular")]
    Singular,
    #[error("normal ordering exceeded the step cap of {0} reductions")]
    StepCapExceeded(usize),
    #[error("generator image for {0} is not homogeneous of degree one")]
    NotLinear(String),
    #[error("Hecke scalar X is identically 2; projectors are undefined")]
    DegenerateX,
    #[error("braid values coincide; affine decomposition does not exist")]
    DegenerateValues,
    #[error("catalog matrix does not lie in the computed RTT solution span")]
    SpanMismatch,
    #[error("deformation {0} is not supported by this operation")]
    UnsupportedDeformation(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("rewrite rule {0} does not decrease the word measure")]
    NonDecreasingRule(String),
    #[error("linear substitution is not invertible")]
    NotInvertible,
}

pub type Result<T> = std::result::Result<T, Error>;
