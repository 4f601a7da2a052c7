use thiserror::Error;

/// Everything that can go wrong across the library.
///
/// Validation variants (`OddDegree` through `ZeroTrailingCoeff`) describe why an
/// input is outside the class of integrands the method handles; the remaining
/// variants are operational (bad file, budget exceeded, precision too low, ...).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator degree must be even and at least 2 (got {0})")]
    OddDegree(usize),

    #[error("numerator degree {num} must be at most denominator degree {den} minus 2")]
    DegreeGap { num: usize, den: usize },

    #[error("denominator has {0} real root(s), so the integral diverges")]
    RealPole(usize),

    #[error("denominator must have a nonzero trailing coefficient")]
    ZeroTrailingCoeff,

    #[error("denominator polynomial is zero")]
    ZeroDenominator,

    #[error("polynomial division left a nonzero remainder")]
    NonZeroRemainder,

    #[error("cotangent multiplication order must be at least 2 (got {0})")]
    InvalidOrder(usize),

    #[error("formula generation would exceed the term budget ({terms} > {limit})")]
    ResourceLimit { terms: usize, limit: usize },

    #[error("formula set expects {expected} input values, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("malformed map file: {0}")]
    FormatError(String),

    #[error("unsupported map file version: expected `landen-map v1`, got `{0}`")]
    VersionMismatch(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("step deltas grew for three consecutive steps; the input may not have a convergent integral")]
    DivergenceSuspected,

    #[error("not enough usable steps to estimate a convergence order")]
    InsufficientData,

    #[error("{digits} digits of precision cannot resolve the quantity at step {step}")]
    PrecisionExhausted { digits: usize, step: usize },

    #[error("quadrature failed to converge within the panel-splitting depth cap")]
    NoConvergence,

    #[error("continued-fraction terms after the first must be positive")]
    InvalidContinuedFraction,

    #[error("cannot parse `{0}` as a rational number")]
    RationalParse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
