use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// Indices carried by the BONG variants are 1-based, matching the usual
/// notation `a_1, ..., a_m`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not Eisenstein: {0}")]
    NotEisenstein(String),
    #[error("unramified polynomial is not irreducible modulo 2: {0}")]
    NotIrreducibleUnramified(String),
    #[error("precision too small: need at least {needed} digits, have {have}")]
    PrecisionTooSmall { needed: u32, have: u32 },
    #[error("precision loss: result vanishes modulo pi^{0}")]
    PrecisionLoss(i64),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero argument")]
    ZeroArgument,
    #[error("degenerate quadratic space")]
    DegenerateSpace,
    #[error("bad codimension {0}: only 0 and 1 are supported")]
    BadCodimension(i64),
    #[error("a_{j} / a_{i} is not in the admissible set", j = .0 + 1, i = .0)]
    NotAdjacentAdmissible(usize),
    #[error("R_{i} > R_{j}: not a good BONG", i = .0, j = .0 + 2)]
    NotGood(usize),
    #[error("entry a_{0} is zero")]
    ZeroEntry(usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("lattices live over different fields")]
    FieldMismatch,
    #[error("no admissible shift t for the binary block at index {0}")]
    NoAdmissibleT(usize),
    #[error("degenerate Gram matrix")]
    DegenerateGram,
    #[error("lattice is not integral (norm order {0})")]
    NonIntegralLattice(i64),
    #[error("enumeration budget exceeded: {states} states > {budget}")]
    BudgetExceeded { states: u128, budget: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotEisenstein(_) => "NotEisenstein",
            Error::NotIrreducibleUnramified(_) => "NotIrreducibleUnramified",
            Error::PrecisionTooSmall { .. } => "PrecisionTooSmall",
            Error::PrecisionLoss(_) => "PrecisionLoss",
            Error::UnsupportedField(_) => "UnsupportedField",
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroArgument => "ZeroArgument",
            Error::DegenerateSpace => "DegenerateSpace",
            Error::BadCodimension(_) => "BadCodimension",
            Error::NotAdjacentAdmissible(_) => "NotAdjacentAdmissible",
            Error::NotGood(_) => "NotGood",
            Error::ZeroEntry(_) => "ZeroEntry",
            Error::IndexOutOfRange(_) => "IndexOutOfRange",
            Error::FieldMismatch => "FieldMismatch",
            Error::NoAdmissibleT(_) => "NoAdmissibleT",
            Error::DegenerateGram => "DegenerateGram",
            Error::NonIntegralLattice(_) => "NonIntegralLattice",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
