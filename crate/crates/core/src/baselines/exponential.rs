use serde::{Deserialize, Serialize};

use super::raw_orness;
use crate::error::{OwaError, Result};
use crate::owa::{check_range, WeightVector};
use crate::roots::bisect_monotone;

const MAX_ITERATIONS: usize = 200;
const PARAMETER_TOLERANCE: f64 = 1e-12;
const ORNESS_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExponentialKind {
    /// Mass concentrated on the smallest inputs.
    AndLike,
    /// Mass concentrated on the largest inputs.
    OrLike,
}

/// Outcome of fitting the exponential parameter to a requested orness.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalibrationResult {
    pub parameter: f64,
    pub achieved_orness: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Geometric weights. Or-like: `wᵢ = a(1-a)^(i-1)` for `i < n` and
/// `wₙ = (1-a)^(n-1)`. And-like: the same vector reversed.
pub fn exponential_raw(a: f64, n: usize, kind: ExponentialKind) -> Result<WeightVector> {
    check_range("a", a, 0.0, 1.0)?;
    check_n(n)?;
    WeightVector::new(geometric(a, n, kind))
}

fn geometric(a: f64, n: usize, kind: ExponentialKind) -> Vec<f64> {
    let q = 1.0 - a;
    let mut w = Vec::with_capacity(n);
    w.extend((0..n - 1).map(|i| a * q.powi(i as i32)));
    w.push(q.powi(n as i32 - 1));
    if kind == ExponentialKind::AndLike {
        w.reverse();
    }
    w
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(OwaError::Domain {
            name: "n",
            value: n as f64,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    Ok(())
}

fn kind_for(orness: f64) -> ExponentialKind {
    if orness <= 0.5 {
        ExponentialKind::AndLike
    } else {
        ExponentialKind::OrLike
    }
}

/// Exponential weights with the parameter fitted by bisection so that the
/// orness of the result matches `orness`.
pub fn exponential_weights(orness: f64, n: usize) -> Result<(WeightVector, CalibrationResult)> {
    check_range("orness", orness, 0.0, 1.0)?;
    check_n(n)?;
    let kind = kind_for(orness);
    // the and-like vector is the reversed or-like one, so fit the or-like
    // orness `1 - orness` instead; either way the goal lies in [0.5, 1]
    let goal = match kind {
        ExponentialKind::AndLike => 1.0 - orness,
        ExponentialKind::OrLike => orness,
    };

    let (a, iterations, bracket_closed) = if goal >= 1.0 {
        (1.0, 0, true)
    } else {
        bisect_monotone(
            |a| raw_orness(&geometric(a, n, ExponentialKind::OrLike)) - goal,
            0.0,
            1.0,
            PARAMETER_TOLERANCE,
            MAX_ITERATIONS,
        )
    };
    let w = WeightVector::new(geometric(a, n, kind))?;
    let achieved = w.orness();
    let residual = (achieved - orness).abs();
    if !bracket_closed || residual > ORNESS_TOLERANCE {
        return Err(OwaError::Calibration {
            parameter: a,
            residual,
            iterations,
        });
    }
    Ok((
        w,
        CalibrationResult {
            parameter: a,
            achieved_orness: achieved,
            iterations,
            converged: true,
        },
    ))
}

/// Exponential weights without calibration: the requested orness is used
/// directly as the family parameter (`a = orness` or-like, `a = 1 - orness`
/// and-like). The achieved orness generally differs from the request.
pub fn exponential_nopreset(orness: f64, n: usize) -> Result<WeightVector> {
    check_range("orness", orness, 0.0, 1.0)?;
    match kind_for(orness) {
        ExponentialKind::AndLike => exponential_raw(1.0 - orness, n, ExponentialKind::AndLike),
        ExponentialKind::OrLike => exponential_raw(orness, n, ExponentialKind::OrLike),
    }
}
