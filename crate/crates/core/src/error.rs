use thiserror::Error;

use crate::matrix::LinalgError;
use crate::scalar::ParseRationalError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("mu is not symmetric at indices ({0},{1})")]
    MuNotSymmetric(usize, usize),
    #[error("bracket is not antisymmetric at indices ({0},{1})")]
    BracketNotAntisymmetric(usize, usize),
    #[error("{what} is not symmetric at indices ({i},{j})")]
    NotSymmetric { what: String, i: usize, j: usize },
    #[error("{what} is not antisymmetric at indices ({i},{j})")]
    NotAntisymmetric { what: String, i: usize, j: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("algebra is not multiplicative (twist maps are not an algebra endomorphism)")]
    NotMultiplicative,
    #[error("degree {0} is out of range")]
    DegreeOutOfRange(usize),
    #[error("cochain is not admissible: {0}")]
    Inadmissible(String),
    #[error("coboundary image of an admissible cochain is not admissible in degree {0}")]
    AdmissibilityNotPreserved(usize),
    #[error("assembled coboundaries do not compose to zero: d^{0} d^{1} != 0")]
    NotAComplex(usize, usize),
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("not a Nijenhuis operator: {0}")]
    NotNijenhuis(String),
    #[error("invalid section: {0}")]
    InvalidSection(String),
    #[error("fiber is not an abelian ideal: {0}")]
    NotAbelianIdeal(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("malformed input: {0}")]
    Input(String),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by malformed or inconsistent input rather than a mathematical verdict.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Shape(_)
                | Error::MuNotSymmetric(..)
                | Error::BracketNotAntisymmetric(..)
                | Error::NotSymmetric { .. }
                | Error::NotAntisymmetric { .. }
                | Error::DegreeOutOfRange(_)
                | Error::Parameter(_)
                | Error::Input(_)
                | Error::Json(_)
                | Error::Io(_)
                | Error::Linalg(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
