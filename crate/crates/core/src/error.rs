use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("extension degree {0} outside supported range 2..=64")]
    DegreeOutOfRange(u32),
    #[error("modulus has degree {found:?}, expected {expected}")]
    DegreeMismatch { expected: u32, found: Option<usize> },
    #[error("modulus {0} is reducible over GF(2)")]
    ReducibleModulus(String),
    #[error("element {value:#x} does not fit in GF(2^{n})")]
    ElementOutOfRange { value: u64, n: u32 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cyclotomic index {0} must be odd and positive")]
    InvalidCyclotomicIndex(u64),
    #[error("{l} does not divide {n}")]
    NotADivisor { l: u32, n: u32 },
    #[error("polynomial {0} does not divide X^n + 1")]
    NotAFactor(String),
    #[error("polynomial {0} has a nonzero coefficient of X")]
    NonzeroLinearTerm(String),
    #[error("polynomial {0} has zero constant term")]
    ZeroConstantTerm(String),
    #[error("basis vectors are linearly dependent over GF(2)")]
    DependentBasis,
    #[error("dimension {k} out of range for n = {n}")]
    DimensionOutOfRange { k: usize, n: u32 },
    #[error("coset representative lies in the subspace, coset contains 0")]
    CosetContainsZero,
    #[error("lift hypothesis violated: inner dimension {r} must be < n/l = {bound}")]
    LiftHypothesis { r: usize, bound: u32 },
    #[error("subspace count {count} exceeds exhaustive cap {cap}")]
    CapExceeded { count: u128, cap: u128 },
    #[error("even-n construction requires even n >= 4, got {0}")]
    OddDegree(u32),
    #[error("irreducible factor of degree {0} needs a field larger than GF(2^64)")]
    FieldTooLarge(u64),
    #[error("too many divisors ({0}) to enumerate hyper-matrices")]
    TooManyDivisors(usize),
    #[error("invalid hex string {0:?}")]
    InvalidHex(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("identity violated: {0}")]
    IdentityViolation(String),
}
