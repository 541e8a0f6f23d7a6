use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("slope undefined: {0}")]
    UndefinedSlope(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("relation {index} does not vanish")]
    RelationFailure { index: usize },

    #[error("relations not admissible: {0}")]
    NotAdmissible(String),

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("operation requires a prime field: {0}")]
    RequiresFiniteField(String),

    #[error("zero object: {0}")]
    ZeroObject(String),

    #[error("input is unstable")]
    Unstable,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Guard and parse failures are input problems; everything else is a
    /// domain-level outcome.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::GuardExceeded(_) | Error::Parse(_))
    }

    /// Short stable identifier for diagnostics.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::UndefinedSlope(_) => "undefined-slope",
            Error::Precondition(_) => "precondition",
            Error::Infeasible(_) => "infeasible",
            Error::GuardExceeded(_) => "guard-exceeded",
            Error::Shape(_) => "shape",
            Error::RelationFailure { .. } => "relation-failure",
            Error::NotAdmissible(_) => "not-admissible",
            Error::FieldMismatch(_) => "field-mismatch",
            Error::RequiresFiniteField(_) => "requires-finite-field",
            Error::ZeroObject(_) => "zero-object",
            Error::Unstable => "unstable",
            Error::Parse(_) => "parse",
        }
    }
}
