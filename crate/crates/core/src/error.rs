use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("expected a positive prime, got {0}")]
    NonPositivePrime(i64),

    #[error("the Legendre symbol needs an odd prime modulus, got 2")]
    EvenModulus,

    #[error("{a} is not invertible modulo {n}")]
    NotCoprime { a: i64, n: u64 },

    #[error("modulus must be at least {min}, got {n}")]
    ModulusTooSmall { n: u64, min: u64 },

    #[error("{0} is not squarefree")]
    NonSquarefree(i64),

    #[error("{0} is not an allowed quadratic radicand (0 and 1 are excluded)")]
    DisallowedValue(i64),

    #[error("biquadratic field needs two distinct radicands, got {0} twice")]
    RepeatedRadicand(i64),

    #[error("the two primes must be distinct, got {0} twice")]
    EqualPrimes(u64),

    #[error("prime {0} is not congruent to 3 mod 4")]
    BadModulus(u64),

    #[error("exponent must be at least 1")]
    ZeroExponent,

    #[error("prime {prime} equals the conductor prime {l}; use the cyclotomic classifier instead")]
    PrimeEqualsConductor { prime: u64, l: u64 },

    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("invalid field spec {0:?}")]
    InvalidFieldSpec(String),

    #[error("arguments of a quaternion algebra must be nonzero")]
    ZeroArgument,

    #[error("sweep bound {0} exceeds 10000")]
    MaxPrimeTooLarge(u64),

    #[error("arithmetic overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
