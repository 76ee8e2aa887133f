use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::catalog::UnknownEntry;
use crate::cohomology::CohomologyError;
use crate::exterior::ExteriorError;
use crate::formality::FormalityError;
use crate::io::IoError;
use crate::scalar::ScalarError;

/// Any error the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Exterior(#[from] ExteriorError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Formality(#[from] FormalityError),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Catalog(#[from] UnknownEntry),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// True when the error signals a violated internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        match self {
            Error::Algebra(e) => e.is_internal(),
            Error::Exterior(e) => e.is_internal(),
            Error::Cohomology(e) => e.is_internal(),
            Error::Formality(e) => e.is_internal(),
            _ => false,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::Scalar(_) => "scalar",
            Error::Algebra(_) => "algebra",
            Error::Exterior(_) => "exterior",
            Error::Cohomology(_) => "cohomology",
            Error::Formality(_) => "formality",
            Error::Io(IoError::ParseError { .. }) => "parse",
            Error::Io(IoError::ValidationError { .. }) => "validation",
            Error::Io(IoError::Read { .. }) => "read",
            Error::Catalog(_) => "unknown_entry",
            Error::Usage(_) => "usage",
        }
    }
}
