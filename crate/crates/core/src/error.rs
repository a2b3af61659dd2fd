use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("classification error: {0}")]
    Classification(String),
    #[error("stability error: {0}")]
    Stability(String),
    #[error("hypothesis error: {0}")]
    Hypothesis(String),
    #[error("regularity error: {0}")]
    Regularity(String),
    #[error("height bound error: need {needed}, table has {have}")]
    Bound { needed: u64, have: u64 },
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("form error: {0}")]
    Form(String),
    #[error("evenness error: {0}")]
    Evenness(String),
    #[error("symmetry error: {0}")]
    Symmetry(String),
    #[error("precondition error: {0}")]
    Precondition(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code: 1 for a failed mathematical check, 2 for bad input,
    /// 3 for an exceeded resource bound.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Shape(_) | Error::Precondition(_) => 2,
            Error::Resource(_) | Error::Bound { .. } => 3,
            _ => 1,
        }
    }

    /// Stable short name, used as a machine-readable kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::Shape(_) => "shape",
            Error::Classification(_) => "classification",
            Error::Stability(_) => "stability",
            Error::Hypothesis(_) => "hypothesis",
            Error::Regularity(_) => "regularity",
            Error::Bound { .. } => "bound",
            Error::Resource(_) => "resource",
            Error::Form(_) => "form",
            Error::Evenness(_) => "evenness",
            Error::Symmetry(_) => "symmetry",
            Error::Precondition(_) => "precondition",
            Error::Internal(_) => "internal",
        }
    }
}
