use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: String, found: String },
    #[error("modulus {0} is not prime; rank over Z/{0} is undefined")]
    UnsupportedModulus(u32),
    #[error("element {0} is not a member of the subgroup")]
    NotMember(String),
    #[error("subgroup is not contained in the cover group")]
    NotSubgroup,
    #[error("configuration error: {0}")]
    Config(String),
    #[error("inconsistent cover data: {0}")]
    InconsistentCover(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("negative-curve reduction of {0} did not terminate")]
    NonTermination(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("relator {0} does not hold as an affine identity")]
    RelatorFailed(String),
    #[error("map does not vanish on relator {0}")]
    NotHomomorphism(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dim(expected: impl ToString, found: impl ToString) -> Self {
        Error::Dimension {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
