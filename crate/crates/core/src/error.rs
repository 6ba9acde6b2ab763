use thiserror::Error;

/// Everything that can go wrong in the library.
///
/// Variants split into input-validation failures and internal-consistency
/// failures (`is_internal`). The latter mean a decision table or a
/// transcribed data row disagrees with itself and should never fire on
/// valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("{0} is not square-free")]
    NotSquarefree(String),
    #[error("{what} must be nonzero")]
    Zero { what: &'static str },
    #[error("singular curve: discriminant is zero")]
    Singular,
    #[error("c4^3 - c6^2 != 1728*delta for ({c4}, {c6}, {delta})")]
    DiscriminantMismatch { c4: String, c6: String, delta: String },
    #[error("{what} is not {p}-integral")]
    NotIntegral { what: String, p: u64 },
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("unknown graph type {0:?}")]
    UnknownType(String),
    #[error("t={0} is a cusp")]
    Cusp(String),
    #[error("{0}")]
    MissingParameter(String),
    #[error("branch condition is undefined: {0}")]
    UndefinedBranch(String),
    #[error("point ({x}, {y}) is not on y^2 + y = x^3 - x^2 - 10x - 20")]
    NotOnCurve { x: String, y: String },
    #[error("j-map is indeterminate at x=16 (printed value at (16,60) is -11*131^3)")]
    Indeterminate,
    #[error("modulus {0} is too large for machine arithmetic")]
    ModulusTooLarge(String),
    #[error("precision must be between 64 and 8192 bits, got {0}")]
    BadPrecision(usize),
    #[error("bound {got} is below the minimum {min}")]
    BoundTooSmall { min: u64, got: u64 },
    #[error("numeric precision exhausted at {bits} bits: {detail}")]
    PrecisionExhausted { bits: usize, detail: String },
    #[error("height gap below numeric resolution: {0}")]
    Inconclusive(String),
    #[error("no table row matches {0}")]
    TableMiss(String),
    #[error("several table rows match {0}")]
    AmbiguousRows(String),
    #[error("tie between vertices {0}")]
    Tie(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::NotSquarefree(_) => "not_squarefree",
            Error::Zero { .. } => "zero",
            Error::Singular => "singular",
            Error::DiscriminantMismatch { .. } => "discriminant_mismatch",
            Error::NotIntegral { .. } => "not_integral",
            Error::Parse { .. } => "parse",
            Error::UnknownType(_) => "unknown_type",
            Error::Cusp(_) => "cusp",
            Error::MissingParameter(_) => "missing_parameter",
            Error::UndefinedBranch(_) => "undefined_branch",
            Error::NotOnCurve { .. } => "not_on_curve",
            Error::Indeterminate => "indeterminate",
            Error::ModulusTooLarge(_) => "modulus_too_large",
            Error::BadPrecision(_) => "bad_precision",
            Error::BoundTooSmall { .. } => "bound_too_small",
            Error::PrecisionExhausted { .. } => "precision_exhausted",
            Error::Inconclusive(_) => "inconclusive",
            Error::TableMiss(_) => "table_miss",
            Error::AmbiguousRows(_) => "ambiguous_rows",
            Error::Tie(_) => "tie",
            Error::Inconsistent(_) => "inconsistent",
        }
    }

    /// True for failures that signal a table or data bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::TableMiss(_)
                | Error::AmbiguousRows(_)
                | Error::Tie(_)
                | Error::Inconsistent(_)
                | Error::PrecisionExhausted { .. }
                | Error::Inconclusive(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
