use thiserror::Error;

/// Domain errors raised by the algebra modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("valuation of zero is undefined")]
    ZeroValuation,
    #[error("tame symbol needs nonzero arguments")]
    ZeroArgument,
    #[error("matrix does not have determinant 1")]
    NotUnimodular,
    #[error("residue is undefined for negative t2-valuation {0}")]
    NegativeValuation(i64),
    #[error("series live on different cones")]
    ConeMismatch,
    #[error("series truncated at order {have}, need {need}")]
    InsufficientTruncation { have: i64, need: i64 },
    #[error("factor direction {0:?} is not in the cone or its negative")]
    NotExpandableInCone(Vec<i64>),
    #[error("support does not fit in a translate of the cone")]
    SupportOutsideCone,
    #[error("factor 1 - c*t^b vanishes identically")]
    DegenerateFactor,
    #[error("cannot invert {0}")]
    NotInvertible(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

impl Error {
    /// Short machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotFiniteType(_) => "NotFiniteType",
            Error::ZeroValuation => "ZeroValuation",
            Error::ZeroArgument => "ZeroArgument",
            Error::NotUnimodular => "NotUnimodular",
            Error::NegativeValuation(_) => "NegativeValuation",
            Error::ConeMismatch => "ConeMismatch",
            Error::InsufficientTruncation { .. } => "InsufficientTruncation",
            Error::NotExpandableInCone(_) => "NotExpandableInCone",
            Error::SupportOutsideCone => "SupportOutsideCone",
            Error::DegenerateFactor => "DegenerateFactor",
            Error::NotInvertible(_) => "NotInvertible",
            Error::Dimension { .. } => "Dimension",
            Error::NotPrime(_) => "NotPrime",
            Error::Invalid(_) => "Invalid",
            Error::Parse { .. } => "ParseError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
