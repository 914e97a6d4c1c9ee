use thiserror::Error;

/// Errors produced across the library. Every operation that rejects its
/// input does so through one of these variants; nothing panics on bad
/// mathematical input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} outside supported range 1..=4")]
    ExtensionDegree(usize),
    #[error("matrix is not invertible over the coefficient ring")]
    NotInvertible,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("not irreducible")]
    NotIrreducible,
    #[error("submodule is not stable under the group action")]
    UnstableSubmodule,
    #[error("{0}")]
    DomainError(String),
    #[error("outside dictionary normal form: {0}")]
    OutsideDictionary(String),
    #[error("not in image of LL: {0}")]
    NotInImage(String),
    #[error("residue required: v(a_p) = 0 needs the unit residue of a_p")]
    ResidueRequired,
    #[error("outside proven range: v(a_p) >= 1 with k >= p+2 is not covered")]
    OutsideProvenRange,
    #[error("insufficient precision: need at least {needed} coefficients, have {have}")]
    InsufficientPrecision { needed: usize, have: usize },
    #[error("cache error: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
