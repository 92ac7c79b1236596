use thiserror::Error;

/// Errors produced by profile construction, rendering, analysis and IO.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("theta = {theta} lies outside the profile domain [{start}, {end}]")]
    OutsideDomain { theta: f64, start: f64, end: f64 },
    #[error("profile domains do not overlap on an interval of positive length")]
    DisjointDomains,
    #[error("invalid integration interval: {0}")]
    InvalidInterval(String),
    #[error("profile is aperiodic")]
    Aperiodic,
    #[error("profile does not describe a closed curve")]
    NotClosing,
    #[error("curve is not closed")]
    CurveNotClosed,
    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),
    #[error("angle profile is not convex (convexity margin {margin:.6e})")]
    NotConvex { margin: f64 },
    #[error("numeric range exceeded: {0}")]
    NumericRange(String),
    #[error("invalid samples: {0}")]
    InvalidSamples(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported format version {found} (supported up to {supported})")]
    UnsupportedVersion { found: i64, supported: i64 },
}

/// Coarse classification of an [`Error`], used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or out-of-range input.
    Input,
    /// Floating-point overflow or similar numeric limits.
    NumericRange,
    /// The input is well formed but outside what the representation can express.
    Representability,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NumericRange(_) => ErrorKind::NumericRange,
            Error::Aperiodic
            | Error::NotClosing
            | Error::CurveNotClosed
            | Error::NotConvex { .. }
            | Error::DisjointDomains
            | Error::DegenerateCurve(_) => ErrorKind::Representability,
            _ => ErrorKind::Input,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
