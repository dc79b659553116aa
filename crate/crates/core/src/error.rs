use thiserror::Error;

/// Errors raised by weight construction and the weight-determination methods.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OwaError {
    #[error("weight vector must have at least one element")]
    Empty,

    #[error("weight w{index} = {value} is outside [0, 1]")]
    WeightOutOfRange { index: usize, value: f64 },

    #[error("weights sum to {sum}, expected 1 within {tolerance:e}")]
    NotNormalized { sum: f64, tolerance: f64 },

    #[error("input contains non-finite value {value} at position {index}")]
    NonFiniteInput { index: usize, value: f64 },

    #[error("dimension mismatch: weight vector has {weights} entries, input has {inputs}")]
    DimensionMismatch { weights: usize, inputs: usize },

    #[error("{name} = {value} is outside [{min}, {max}]")]
    Domain {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("n = {n} is too small for the closed-form coefficients (need n >= 3); use linear_weights, which special-cases n = 1 and n = 2")]
    TooFewForCoefficients { n: usize },

    #[error("maximum-entropy weights are undefined at orness {orness}: the objective requires every weight to be positive, so the min/max operators are excluded")]
    Unsupported { orness: f64 },

    #[error("numerical instability at orness {orness} (n = {n}): {reason}")]
    Unstable {
        orness: f64,
        n: usize,
        reason: String,
    },

    #[error("calibration did not converge after {iterations} iterations: best parameter {parameter}, orness residual {residual:e}")]
    Calibration {
        parameter: f64,
        residual: f64,
        iterations: usize,
    },
}

pub type Result<T> = std::result::Result<T, OwaError>;
