//! Domain types, OWA aggregation and the orness / dispersion measures.

use serde::{Deserialize, Serialize};

use crate::error::{OwaError, Result};

/// Absolute tolerance on `Σ wᵢ = 1`.
pub const SUM_TOLERANCE: f64 = 1e-12;

/// Shape exponent used when the caller does not pick one.
pub const DEFAULT_BETA: f64 = 1.5;

/// Ordered OWA weights. `w[0]` multiplies the largest input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    /// Validates `weights`: non-empty, each entry in `[0, 1]`, sum within
    /// [`SUM_TOLERANCE`] of one.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(OwaError::Empty);
        }
        let mut sum = 0.0;
        for (i, &w) in weights.iter().enumerate() {
            if !(0.0..=1.0).contains(&w) {
                return Err(OwaError::WeightOutOfRange {
                    index: i + 1,
                    value: w,
                });
            }
            sum += w;
        }
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(OwaError::NotNormalized {
                sum,
                tolerance: SUM_TOLERANCE,
            });
        }
        Ok(Self(weights))
    }

    /// Uniform weights `1/n` (the arithmetic mean).
    pub fn uniform(n: usize) -> Self {
        assert!(n >= 1, "uniform weights need n >= 1");
        Self(vec![1.0 / n as f64; n])
    }

    /// The maximum operator `[1, 0, …, 0]`.
    pub fn max_operator(n: usize) -> Self {
        assert!(n >= 1);
        let mut w = vec![0.0; n];
        w[0] = 1.0;
        Self(w)
    }

    /// The minimum operator `[0, …, 0, 1]`.
    pub fn min_operator(n: usize) -> Self {
        assert!(n >= 1);
        let mut w = vec![0.0; n];
        w[n - 1] = 1.0;
        Self(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }

    /// Same weights in the opposite order; maps orness `o` to `1 - o`.
    pub fn reversed(&self) -> Self {
        let mut w = self.0.clone();
        w.reverse();
        Self(w)
    }

    pub fn orness(&self) -> f64 {
        orness(self)
    }

    pub fn dispersion(&self) -> f64 {
        dispersion(self)
    }
}

impl AsRef<[f64]> for WeightVector {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

/// Requested orness together with the shape exponent of the linear method.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrnessTarget {
    orness: f64,
    beta: f64,
}

impl OrnessTarget {
    pub fn new(orness: f64, beta: f64) -> Result<Self> {
        check_range("orness", orness, 0.0, 1.0)?;
        check_range("beta", beta, 1.0, 1.5)?;
        Ok(Self { orness, beta })
    }

    /// Target with the default `beta = 1.5`.
    pub fn with_default_beta(orness: f64) -> Result<Self> {
        Self::new(orness, DEFAULT_BETA)
    }

    pub fn orness(&self) -> f64 {
        self.orness
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }
}

/// Values to aggregate. No ordering is assumed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct InputVector(Vec<f64>);

impl InputVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(OwaError::Empty);
        }
        if let Some((i, &v)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(OwaError::NonFiniteInput { index: i, value: v });
        }
        Ok(Self(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

/// Orness plus a flag for the degenerate single-weight operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrnessValue {
    pub value: f64,
    /// Set when `n = 1`: the operator is min, max and mean at once and the
    /// value is reported as 0.5 by convention.
    pub degenerate: bool,
}

/// `orness(w) = 1/(n-1) Σ (n-i) wᵢ`, with `n = 1` reported as 0.5.
pub fn orness_value(w: &WeightVector) -> OrnessValue {
    let n = w.len();
    if n == 1 {
        return OrnessValue {
            value: 0.5,
            degenerate: true,
        };
    }
    let acc: f64 = w
        .as_slice()
        .iter()
        .enumerate()
        .map(|(i, &wi)| (n - 1 - i) as f64 * wi)
        .sum();
    OrnessValue {
        value: acc / (n - 1) as f64,
        degenerate: false,
    }
}

pub fn orness(w: &WeightVector) -> f64 {
    orness_value(w).value
}

/// Shannon entropy `-Σ wᵢ ln wᵢ` with `0 ln 0 = 0`.
pub fn dispersion(w: &WeightVector) -> f64 {
    let plogp: f64 = w
        .as_slice()
        .iter()
        .filter(|&&wi| wi > 0.0)
        .map(|&wi| wi * wi.ln())
        .sum();
    // subtraction instead of negation keeps 0 from printing as -0
    0.0 - plogp
}

/// `Σ wᵢ x̄ᵢ` where `x̄` is `x` sorted from highest to lowest.
pub fn aggregate(w: &WeightVector, x: &InputVector) -> Result<f64> {
    if w.len() != x.len() {
        return Err(OwaError::DimensionMismatch {
            weights: w.len(),
            inputs: x.len(),
        });
    }
    let mut sorted = x.as_slice().to_vec();
    // stable, so ties keep their input order
    sorted.sort_by(|a, b| b.total_cmp(a));
    Ok(w.as_slice()
        .iter()
        .zip(&sorted)
        .map(|(wi, xi)| wi * xi)
        .sum())
}

pub(crate) fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
    if value.is_nan() || value < min || value > max {
        return Err(OwaError::Domain {
            name,
            value,
            min,
            max,
        });
    }
    Ok(())
}
