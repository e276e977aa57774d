use thiserror::Error;

/// Crate-wide error type.
///
/// `NotApplicable` and `BudgetExceeded` are ordinary, expected outcomes
/// (asking for a witness against the Borda rule, or an enumeration too large
/// to run); the CLI maps them to dedicated exit codes. `ConstructionFault`
/// signals a broken internal invariant and should never be observed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown alternative {0:?}")]
    UnknownAlternative(String),

    #[error("score vector has {got} entries but {want} are required")]
    DimensionMismatch { got: usize, want: usize },

    #[error("invalid score vector: {0}")]
    InvalidScoreVector(String),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("enumeration of {needed} profiles exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("construction fault: {0}")]
    ConstructionFault(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
