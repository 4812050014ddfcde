use thiserror::Error;

/// Errors raised across the library.
///
/// Domain errors (singular matrices, poles, chart singularities) mark inputs
/// that lie outside the open dense set where a map is defined. The verifier
/// treats them as rejections rather than failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("leading matrix B is singular")]
    SingularB,
    #[error("det P1(X, Y) = 0: input outside the map's domain")]
    SingularP1,
    #[error("det(U - Y) = 0")]
    SingularDifference,
    #[error("det N = 0: triple is not generic")]
    NonGenericTriple,
    #[error("chart is singular at this point: {0}")]
    ChartSingular(String),
    #[error("unsupported chart: {0}")]
    UnsupportedChart(String),
    #[error("square root radicand on the branch cut")]
    BranchCut,
    #[error("pole encountered: {0}")]
    PoleEncountered(&'static str),
    #[error("squeeze condition y1 = x2 violated")]
    SqueezeViolated,
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("backend does not support this operation: {0}")]
    Unsupported(&'static str),
    #[error("sampling exhausted after {0} rejections")]
    SamplingExhausted(usize),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("unknown map: {0}")]
    UnknownMap(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("identity violated: {0}")]
    IdentityViolated(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True for errors that mean "the point is outside the domain of the map".
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::DivisionByZero
                | Error::SingularMatrix
                | Error::SingularB
                | Error::SingularP1
                | Error::SingularDifference
                | Error::NonGenericTriple
                | Error::ChartSingular(_)
                | Error::BranchCut
                | Error::PoleEncountered(_)
                | Error::DomainError(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
