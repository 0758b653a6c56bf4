use thiserror::Error;

use crate::exactla::FieldTag;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldTag, FieldTag),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("Jacobi identity fails on {count} basis triple(s), first at {first:?}")]
    InvalidAlgebra {
        count: usize,
        first: (usize, usize, usize),
    },

    #[error("representation identity fails on {count} basis pair(s), first at {first:?}")]
    InvalidModule { count: usize, first: (usize, usize) },

    #[error("invalid commutative algebra: {0}")]
    InvalidCommAlgebra(String),

    #[error("subspace is not an ideal: [e_{basis}, b_{member}] leaves it")]
    NotAnIdeal { basis: usize, member: usize },

    #[error("subspace is not a subalgebra: [s_{0}, s_{1}] leaves it")]
    NotSubalgebra(usize, usize),

    #[error("enumeration budget exceeded: {needed} points needed, cap is {cap}")]
    BudgetExceeded { needed: u128, cap: u64 },

    #[error("pair family `{0}` failed polynomial identity certification")]
    FamilyInvalid(String),

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    #[error("unsupported characteristic {0}: {1}")]
    UnsupportedCharacteristic(u64, &'static str),

    #[error("emitted pair does not annihilate: {0}")]
    PairVerification(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable diagnostic code, printed by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "E-DIM",
            Error::FieldMismatch(..) => "E-FIELD",
            Error::Input(_) => "E-INPUT",
            Error::InvalidAlgebra { .. } => "E-JACOBI",
            Error::InvalidModule { .. } => "E-MODULE",
            Error::InvalidCommAlgebra(_) => "E-COMM",
            Error::NotAnIdeal { .. } => "E-IDEAL",
            Error::NotSubalgebra(..) => "E-SUBALG",
            Error::BudgetExceeded { .. } => "E-BUDGET",
            Error::FamilyInvalid(_) => "E-FAMILY",
            Error::UnknownBuiltin(_) => "E-BUILTIN",
            Error::UnsupportedCharacteristic(..) => "E-CHAR",
            Error::PairVerification(_) => "E-PAIR",
            Error::Json(_) => "E-JSON",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
