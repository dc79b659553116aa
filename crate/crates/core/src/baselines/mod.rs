//! Comparison methods: the exponential (geometric) family with and without
//! orness calibration, and maximum-entropy weights.

mod exponential;
mod maxent;

pub use exponential::{
    exponential_nopreset, exponential_raw, exponential_weights, CalibrationResult, ExponentialKind,
};
pub use maxent::{maxent_weights, MAXENT_ORNESS_TOLERANCE};

/// Orness of an unvalidated weight slice (`n >= 2`).
pub(crate) fn raw_orness(w: &[f64]) -> f64 {
    let n = w.len();
    w.iter()
        .enumerate()
        .map(|(i, &wi)| (n - 1 - i) as f64 * wi)
        .sum::<f64>()
        / (n - 1) as f64
}
