//! Closed-form linear weight family.
//!
//! For an and-like target `α ≤ 0.5` the last weight takes `wₙ = 1 - Δ` with
//! `Δ = f(α)(n-1)/n`, and the remaining mass is spread over `w₁…wₙ₋₁` along
//! the line `wᵢ = K·i + b`. Requiring the line to carry exactly `Δ` and the
//! whole vector to have orness `α` pins `K` and `b` in closed form. Or-like
//! targets are built for `1 - α` and reversed.

use serde::{Deserialize, Serialize};

use crate::error::{OwaError, Result};
use crate::owa::{check_range, OrnessTarget, WeightVector};

/// Negative weights smaller than this in magnitude are treated as rounding.
const ROUNDING_FLOOR: f64 = 1e-12;

/// Coefficients of the weight line for an and-like target.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearCoefficients {
    /// Slope of the weight line.
    pub k: f64,
    /// Intercept of the weight line.
    pub b: f64,
    /// Mass moved off `wₙ` onto the line.
    pub delta: f64,
    /// Number of weights on the line, `n - 1`.
    pub m: usize,
    pub f_value: f64,
}

/// `f(α) = 1 - (1 - 2α)^β`, increasing from `f(0) = 0` to `f(0.5) = 1`.
pub fn f_alpha(alpha: f64, beta: f64) -> Result<f64> {
    check_range("alpha", alpha, 0.0, 0.5)?;
    check_range("beta", beta, 1.0, 1.5)?;
    Ok(shape(alpha, beta))
}

fn shape(alpha: f64, beta: f64) -> f64 {
    let base = 1.0 - 2.0 * alpha;
    // exact identities for the two common exponents avoid a general powf
    let power = if beta == 1.5 {
        base * base.sqrt()
    } else if beta == 1.0 {
        base
    } else {
        base.powf(beta)
    };
    1.0 - power
}

pub fn linear_coefficients(alpha: f64, n: usize, beta: f64) -> Result<LinearCoefficients> {
    if n < 3 {
        return Err(OwaError::TooFewForCoefficients { n });
    }
    Ok(coefficients(alpha, n, f_alpha(alpha, beta)?))
}

fn coefficients(alpha: f64, n: usize, f: f64) -> LinearCoefficients {
    let nf = n as f64;
    let mut k = 6.0 * (f - 2.0 * alpha) / (nf * (nf - 2.0));
    // f(α) ≥ 2α holds exactly; at β = 1 rounding can leave k a hair below 0
    if k < 0.0 && k > -ROUNDING_FLOOR {
        k = 0.0;
    }
    let b = f / nf - k * nf / 2.0;
    LinearCoefficients {
        k,
        b,
        delta: f * (nf - 1.0) / nf,
        m: n - 1,
        f_value: f,
    }
}

/// Weights of size `n` whose orness equals `target.orness()`.
///
/// `n = 1` yields `[1]` and `n = 2` yields `[orness, 1 - orness]`, the only
/// vectors available at those sizes.
pub fn linear_weights(target: OrnessTarget, n: usize) -> Result<WeightVector> {
    let orness = target.orness();
    match n {
        0 => return Err(OwaError::Empty),
        1 => return WeightVector::new(vec![1.0]),
        2 => return WeightVector::new(vec![orness, 1.0 - orness]),
        _ => {}
    }

    let or_like = orness > 0.5;
    let alpha = if or_like { 1.0 - orness } else { orness };
    // the target already guarantees alpha and beta are in range
    let c = coefficients(alpha, n, shape(alpha, target.beta()));

    let mut w = Vec::with_capacity(n);
    w.extend((1..n).map(|i| c.k * i as f64 + c.b));
    w.push(1.0 - c.delta);
    if or_like {
        w.reverse();
    }
    WeightVector::new(clamp_rounding(w))
}

fn clamp_rounding(mut w: Vec<f64>) -> Vec<f64> {
    if w.iter().all(|&x| x >= 0.0) {
        return w;
    }
    for x in w.iter_mut() {
        if *x < 0.0 {
            assert!(
                *x > -ROUNDING_FLOOR,
                "linear weight {x} is negative beyond rounding"
            );
            *x = 0.0;
        }
    }
    let sum: f64 = w.iter().sum();
    w.iter_mut().for_each(|x| *x /= sum);
    w
}
