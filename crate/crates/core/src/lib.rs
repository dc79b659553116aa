//! Weight determination for Ordered Weighted Averaging (OWA) operators.
//!
//! The central piece is [`linear::linear_weights`], a closed-form construction
//! that hits any requested orness exactly: one weight carries the mass
//! `1 - Δ` and the remaining `n - 1` weights lie on a straight line. The
//! [`baselines`] module provides the exponential family (with and without
//! orness calibration) and the maximum-entropy weights for comparison, and
//! [`oracle`] holds slow, independent checks used by the test suites.

pub mod baselines;
pub mod error;
pub mod linear;
pub mod oracle;
pub mod owa;
pub mod roots;

pub use baselines::{
    exponential_raw, exponential_weights, maxent_weights, CalibrationResult, ExponentialKind,
};
pub use error::{OwaError, Result};
pub use linear::{f_alpha, linear_coefficients, linear_weights, LinearCoefficients};
pub use owa::{
    aggregate, dispersion, orness, orness_value, InputVector, OrnessTarget, OrnessValue,
    WeightVector, DEFAULT_BETA, SUM_TOLERANCE,
};
