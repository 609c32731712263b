use std::fmt;

/// Errors produced by the geometric and verification routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input collapses below the area / dimension tolerances.
    DegenerateInput(String),
    /// Linear map with (numerically) zero determinant where an invertible one is required.
    SingularMap,
    /// Polarity centre is not strictly interior; carries the index of the
    /// offending edge and its signed clearance.
    CentreNotInterior { edge: usize, clearance: f64 },
    /// Argument outside the documented domain of an operation.
    InvalidParameter(String),
    /// Body lacks the symmetry the operation requires.
    NotSymmetric(String),
    /// Sector configuration violates the supporting-line hypotheses.
    BadConfiguration(String),
    /// Iterative solver exhausted its iteration budget.
    NoConvergence { iterations: usize, gradient_norm: f64 },
    /// A verification was called with inputs that violate the statement's hypotheses.
    HypothesisViolated(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateInput(msg) => write!(f, "degenerate input: {msg}"),
            Error::SingularMap => write!(f, "singular linear map"),
            Error::CentreNotInterior { edge, clearance } => write!(
                f,
                "centre is not strictly interior: clearance {clearance:.3e} to edge {edge}"
            ),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NotSymmetric(msg) => write!(f, "missing symmetry: {msg}"),
            Error::BadConfiguration(msg) => write!(f, "bad sector configuration: {msg}"),
            Error::NoConvergence {
                iterations,
                gradient_norm,
            } => write!(
                f,
                "no convergence after {iterations} iterations (gradient norm {gradient_norm:.3e})"
            ),
            Error::HypothesisViolated(msg) => write!(f, "hypothesis violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
