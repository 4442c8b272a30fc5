use thiserror::Error;

/// Errors raised by geometric constructions, metric evaluations and the harness.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("origin is not in the interior of the body")]
    OriginNotInterior,
    #[error("origin is not a member of the body")]
    OriginNotMember,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point is not in the interior of the ambient body")]
    PointNotInterior,
    #[error("degenerate body: {0}")]
    DegenerateBody(String),
    #[error("body is not centrally symmetric")]
    NotCentrallySymmetric,
    #[error("region is not contained in the interior of the ambient body")]
    RegionNotInterior,
    #[error("inner body is not contained in the interior of the ambient body")]
    BodyNotInterior,
    #[error("radius {radius} outside the admissible range (0, {max}]")]
    RadiusOutOfRange { radius: f64, max: f64 },
    #[error("projective map undefined: <x,y> = {0} >= 1")]
    DomainViolation(f64),
    #[error("ground set is empty")]
    EmptyGroundSet,
    #[error("operation requires a two-dimensional body")]
    NotTwoDimensional,
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error("degenerate cut: volume fraction {0} is 0 or 1")]
    DegenerateCut(f64),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("validation error: {0}")]
    ValidationError(String),
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
    #[error("report list is empty")]
    EmptyReport,
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for GeomError {
    fn from(e: std::io::Error) -> Self {
        GeomError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;
