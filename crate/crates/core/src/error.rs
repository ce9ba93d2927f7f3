use thiserror::Error;

/// Errors raised by the evaluation, zero-finding and radius machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter or argument lies outside the accepted domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("series did not reach the geometric tail regime within {terms} terms (|z| = {abs_z})")]
    NonConvergence { terms: usize, abs_z: f64 },

    /// A quotient was requested where the denominator is indistinguishable from zero.
    #[error("denominator {modulus:e} is below its propagated error bound {bound:e} at z = {z}")]
    NearZeroDenominator { z: String, modulus: f64, bound: f64 },

    #[error("Janowski denominator {modulus:e} vanishes within 10x its error bound {bound:e} at z = {z}")]
    PoleProximity { z: String, modulus: f64, bound: f64 },

    /// The sign-change scan ran out of steps before finding the requested zero.
    #[error(
        "found only {found} of {requested} sign changes before the scan cap at r = {reached}; \
         parameters possibly outside the real-zero regime"
    )]
    ScanExhausted { found: usize, requested: usize, reached: f64 },

    #[error("sign of the series at argument {x} cannot be resolved at the available precision")]
    PrecisionExhausted { x: f64 },

    #[error("argument-principle residual {value} is {distance} away from the nearest integer")]
    NonIntegerResidual { value: f64, distance: f64 },

    #[error("zero table has {available} entries but {requested} were requested")]
    TableTooShort { available: usize, requested: usize },

    /// The real-axis functional stays above the target on the whole search interval.
    #[error("real-axis functional never reaches {target} before the domain bound {bound}")]
    NoCrossing { target: f64, bound: f64 },

    #[error("real-axis functional is not strictly decreasing near r = {at}")]
    MonotonicityViolation { at: f64 },

    #[error("no equation registered for {0}")]
    NotTranscribed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
