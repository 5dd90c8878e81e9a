use thiserror::Error;

/// Errors raised by the geometry routines.
///
/// Every variant is a domain error: the inputs are well formed but fall
/// outside the region where the requested quantity is defined.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("group points need y > 0 and finite coordinates, got ({x}, {y})")]
    InvalidPoint { x: f64, y: f64 },

    #[error("matrix is degenerate: det = {det}")]
    DegenerateMatrix { det: f64 },

    #[error("matrix reverses orientation: det = {det} < 0")]
    OrientationViolation { det: f64 },

    #[error("flat structure with vanishing coefficient f = {f}")]
    FlatDegenerate { f: f64 },

    #[error("line lambda2 = 0 does not meet the absolute: |c + a| = {sum}")]
    AbsoluteIntersectionUndefined { sum: f64 },

    #[error("time {t} lies outside the geodesic domain ({t_min}, {t_max})")]
    DomainExceeded { t: f64, t_min: f64, t_max: f64 },

    #[error("completeness is not determined for K >= 0 with gamma = 0")]
    UnresolvedCase,

    #[error("point ({x}, {y}) is not in the image of the exponential map ({stratum})")]
    NotInDomain { x: f64, y: f64, stratum: &'static str },

    #[error("sphere of radius {radius} is empty (radius exceeds {limit})")]
    EmptySphere { radius: f64, limit: f64 },

    #[error("radius must be positive and finite, got {radius}")]
    InvalidRadius { radius: f64 },

    #[error("operation needs curvature {expected}, structure has {actual}")]
    WrongCurvature { expected: &'static str, actual: &'static str },

    #[error("integration blew up at t = {t}")]
    BlowUp { t: f64 },

    #[error("target ({x}, {y}) is not reachable from the identity")]
    TargetUnreachable { x: f64, y: f64 },
}

impl Error {
    /// Stable identifier of the variant, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidPoint { .. } => "InvalidPoint",
            Error::DegenerateMatrix { .. } => "DegenerateMatrix",
            Error::OrientationViolation { .. } => "OrientationViolation",
            Error::FlatDegenerate { .. } => "FlatDegenerate",
            Error::AbsoluteIntersectionUndefined { .. } => "AbsoluteIntersectionUndefined",
            Error::DomainExceeded { .. } => "DomainExceeded",
            Error::UnresolvedCase => "UnresolvedCase",
            Error::NotInDomain { .. } => "NotInDomain",
            Error::EmptySphere { .. } => "EmptySphere",
            Error::InvalidRadius { .. } => "InvalidRadius",
            Error::WrongCurvature { .. } => "WrongCurvature",
            Error::BlowUp { .. } => "BlowUp",
            Error::TargetUnreachable { .. } => "TargetUnreachable",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
