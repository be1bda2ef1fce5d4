use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("binomial index out of range: k = {k} > n = {n}")]
    BinomialRange { n: u64, k: u64 },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("affine scale factor must be non-zero")]
    ZeroScale,
    #[error("derivative index set is empty")]
    EmptyIndexSet,
    #[error("index {index} outside the admissible range {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("indices must be strictly increasing")]
    UnsortedIndices,
    #[error("factored polynomial has non-rational roots")]
    IrrationalRoots,
    #[error("root finder did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("{what} = {value} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
