use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no input points")]
    EmptyInput,
    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("vertex coordinate {0} is not an integer")]
    NonIntegerVertex(String),
    #[error("affine hull has dimension {affine_dim}, ambient dimension is {dim}")]
    NotFullDimensional { dim: usize, affine_dim: usize },
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("barycenter is the origin, so Q is undefined")]
    BarycenterAtOrigin,
    #[error("beta = {beta} is outside {range}")]
    BetaOutOfRange { beta: String, range: &'static str },
    #[error("{0}")]
    InsufficientSamples(String),
    #[error("sequence `{sequence}` is not polynomial of degree {degree}: sample k={k} disagrees with interpolant")]
    NotPolynomial {
        sequence: &'static str,
        degree: usize,
        k: u64,
    },
    #[error("leading volume coefficient b0 is zero")]
    ZeroB0,
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("cone angle parameter {0} is not in (0, 1)")]
    AlphaOutOfRange(String),
    #[error("operation needs dimension 2, polytope has dimension {0}")]
    UnsupportedDimension(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name used in error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::ZeroDimension => "ZeroDimension",
            Error::NonIntegerVertex(_) => "NonIntegerVertex",
            Error::NotFullDimensional { .. } => "NotFullDimensional",
            Error::ZeroDirection => "ZeroDirection",
            Error::OriginNotInterior => "OriginNotInterior",
            Error::NotReflexive => "NotReflexive",
            Error::BarycenterAtOrigin => "BarycenterAtOrigin",
            Error::BetaOutOfRange { .. } => "BetaOutOfRange",
            Error::InsufficientSamples(_) => "InsufficientSamples",
            Error::NotPolynomial { .. } => "NotPolynomial",
            Error::ZeroB0 => "ZeroB0",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::AlphaOutOfRange(_) => "AlphaOutOfRange",
            Error::UnsupportedDimension(_) => "UnsupportedDimension",
            Error::Parse(_) => "Parse",
        }
    }
}
