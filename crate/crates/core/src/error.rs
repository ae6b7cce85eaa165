use alloc::string::String;
use core::fmt;

/// Errors reported by the statistics and sampling routines.
///
/// Every variant is a contract violation at the call site (invalid parameter,
/// outcome outside a model's domain), never an internal numerical failure.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A quadrature rule needs at least one node.
    EmptyQuadrature,
    /// Outcome counts do not add up to the number of input photons.
    CountMismatch {
        m1: u32,
        m2: u32,
        expected_total: u32,
    },
    /// An approximation was evaluated outside its region of validity.
    OutsideValidity(String),
    /// The peak angle is undefined (no photons, or more counts than photons).
    UndefinedPeakAngle { m1: u32, total: u32 },
    /// The classical intensity density diverges at the edges of its support.
    SingularPoint { intensity: f64 },
    /// A rational probability must lie in [0, 1] with a positive denominator.
    InvalidProbability(String),
    /// Sampling needs a normalized distribution.
    Unnormalized,
    /// The two distributions do not range over the same outcomes.
    IncomparableDistributions(String),
    /// A model parameter is out of range (negative intensity and similar).
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyQuadrature => write!(f, "quadrature rule must have at least one node"),
            Error::CountMismatch {
                m1,
                m2,
                expected_total,
            } => write!(
                f,
                "outcome ({m1}, {m2}) does not conserve the photon number {expected_total}"
            ),
            Error::OutsideValidity(what) => {
                write!(f, "outside the approximation's validity region: {what}")
            }
            Error::UndefinedPeakAngle { m1, total } => {
                write!(f, "peak angle undefined for m1 = {m1}, total = {total}")
            }
            Error::SingularPoint { intensity } => write!(
                f,
                "classical density is singular at the support edge I = {intensity}"
            ),
            Error::InvalidProbability(s) => write!(f, "not a probability: {s}"),
            Error::Unnormalized => write!(f, "distribution is not normalized"),
            Error::IncomparableDistributions(why) => {
                write!(f, "distributions are not comparable: {why}")
            }
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
        }
    }
}

impl core::error::Error for Error {}
