use hopfdy::algcore::AlgError;
use hopfdy::dycomplex::DyError;
use hopfdy::hopfcore::HopfError;
use hopfdy::relext::RelError;
use hopfdy::rmatrix::RMatrixError;
use serde_json::Value;

/// Failures that end a run, each with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid algebra: {message}")]
    Rejected { message: String, details: Value },
    #[error("invalid R-matrix: {0}")]
    InvalidR(String),
    #[error("invalid R-matrix: {message}")]
    RFails { message: String, details: Value },
    #[error("unsupported degree: {0}")]
    Degree(String),
    #[error("time budget exceeded")]
    Budget,
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::InvalidAlgebra(_) | CliError::Rejected { .. } => 2,
            CliError::InvalidR(_) | CliError::RFails { .. } => 3,
            CliError::Degree(_) => 4,
            CliError::Budget => 5,
            CliError::Consistency(_) => 1,
            CliError::Io(_) => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::InvalidAlgebra(_) | CliError::Rejected { .. } => "invalid_algebra",
            CliError::InvalidR(_) | CliError::RFails { .. } => "invalid_r_matrix",
            CliError::Degree(_) => "unsupported_degree",
            CliError::Budget => "budget_exceeded",
            CliError::Consistency(_) => "consistency",
            CliError::Io(_) => "io",
        }
    }

    /// Structured detail for the report, such as the failed axioms.
    pub fn details(&self) -> Option<&Value> {
        match self {
            CliError::Rejected { details, .. } | CliError::RFails { details, .. } => Some(details),
            _ => None,
        }
    }
}

impl From<HopfError> for CliError {
    fn from(e: HopfError) -> Self {
        CliError::InvalidAlgebra(e.to_string())
    }
}

impl From<AlgError> for CliError {
    fn from(e: AlgError) -> Self {
        CliError::InvalidAlgebra(e.to_string())
    }
}

impl From<RMatrixError> for CliError {
    fn from(e: RMatrixError) -> Self {
        CliError::InvalidR(e.to_string())
    }
}

impl From<DyError> for CliError {
    fn from(e: DyError) -> Self {
        match e {
            DyError::Hopf(h) => h.into(),
            DyError::Degree(n) => CliError::Degree(format!("degree {n}")),
            DyError::Consistency(s) => CliError::Consistency(s),
            other => CliError::InvalidAlgebra(other.to_string()),
        }
    }
}

impl From<RelError> for CliError {
    fn from(e: RelError) -> Self {
        match e {
            RelError::Budget => CliError::Budget,
            RelError::Dy(d) => d.into(),
            RelError::Hopf(h) => h.into(),
            RelError::Resolution(s) => CliError::Consistency(s),
            other => CliError::InvalidAlgebra(other.to_string()),
        }
    }
}
