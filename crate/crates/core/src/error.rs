use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge index {index} out of range for {m} edges")]
    EdgeOutOfRange { index: usize, m: usize },

    #[error("{what} needs a simple loop-free graph")]
    NotSimple { what: &'static str },

    #[error("cannot contract loop at edge {0}")]
    ContractLoop(usize),

    #[error("empty hyperedge at index {0}")]
    EmptyEdge(usize),

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("enumeration cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u64,
        cap: u64,
    },

    #[error("polynomial degree {got} does not match expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("zero polynomial has no roots")]
    ZeroPolynomial,

    #[error("root finder did not converge after {iterations} iterations (worst residual {worst_residual:e})")]
    NoConvergence {
        iterations: usize,
        worst_residual: f64,
    },

    #[error("outside the guaranteed zero-free region: {0}")]
    OutsideGuarantee(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Errors caused by a resource cap or budget rather than bad input.
    pub fn is_computational(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::NoConvergence { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
