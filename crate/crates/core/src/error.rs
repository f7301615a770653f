use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("element is not invertible")]
    NotInvertible,

    #[error("operation needs a commutative coefficient ring")]
    NoncommutativeCoefficients,

    #[error("size {got} is too small (need at least {min})")]
    SizeTooSmall { min: usize, got: usize },

    #[error("direct sum needs at least one summand")]
    EmptySum,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("witness does not satisfy its defining identity: {0}")]
    InvalidWitness(String),

    #[error("not a commutator: {0}")]
    NotACommutator(String),

    #[error("element is not boundary-admissible: {0}")]
    InadmissibleInput(String),

    #[error("evaluation point {0} is outside [0, 1]")]
    OutOfDomain(String),

    #[error("no bound rule applies to {0}")]
    UnknownStructure(String),

    #[error("finite ring tables are invalid: {0}")]
    InvalidTables(String),

    #[error("counterexample found: {0}")]
    CounterexampleFound(String),

    #[error("identity failed: {0}")]
    IdentityFailed(String),
}

impl Error {
    pub(crate) fn ring_mismatch(left: impl ToString, right: impl ToString) -> Self {
        Error::RingMismatch {
            left: left.to_string(),
            right: right.to_string(),
        }
    }

    /// Short machine-readable code, used by the CLI's error output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RingMismatch { .. } => "ring_mismatch",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::InvalidRing(_) => "invalid_ring",
            Error::NotInvertible => "not_invertible",
            Error::NoncommutativeCoefficients => "noncommutative_coefficients",
            Error::SizeTooSmall { .. } => "size_too_small",
            Error::EmptySum => "empty_sum",
            Error::Parse(_) => "parse_error",
            Error::InvalidWitness(_) => "invalid_witness",
            Error::NotACommutator(_) => "not_a_commutator",
            Error::InadmissibleInput(_) => "inadmissible_input",
            Error::OutOfDomain(_) => "out_of_domain",
            Error::UnknownStructure(_) => "unknown_structure",
            Error::InvalidTables(_) => "invalid_tables",
            Error::CounterexampleFound(_) => "counterexample_found",
            Error::IdentityFailed(_) => "identity_failed",
        }
    }
}
