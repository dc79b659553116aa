//! Maximum-entropy weights.
//!
//! The optimum is geometric, `wⱼ = (w₁^(n-j) wₙ^(j-1))^(1/(n-1))`, with `w₁`
//! the nontrivial root of
//!
//! ```text
//! w₁ [(n-1)α + 1 - n w₁]ⁿ = ((n-1)α)^(n-1) [((n-1)α - n) w₁ + 1]
//! ```
//!
//! and `wₙ = (((n-1)α - n) w₁ + 1) / ((n-1)α + 1 - n w₁)`. The polynomial
//! always has a double root at `w₁ = 1/n`; for `α > 0.5` the wanted root lies
//! in `(1/n, 1)`. Or-like targets are solved directly, and-like targets by
//! symmetry.
//!
//! Near `α → 1` the numerator of `wₙ` is a difference of two nearly equal
//! numbers and loses every significant digit once `wₙ` drops below about
//! machine epsilon. Those results are detected and reported as
//! [`OwaError::Unstable`] instead of being returned.

use super::raw_orness;
use crate::error::{OwaError, Result};
use crate::owa::{check_range, WeightVector, SUM_TOLERANCE};
use crate::roots::{newton_bisect, RootError};

/// Largest accepted gap between requested and achieved orness.
pub const MAXENT_ORNESS_TOLERANCE: f64 = 1e-9;

/// Largest accepted `|Σw - 1|` before renormalization.
const RAW_SUM_TOLERANCE: f64 = 1e-6;

const ROOT_TOLERANCE: f64 = 1e-16;
const ROOT_MAX_ITERATIONS: usize = 200;

/// Weights maximizing dispersion for the requested orness, `0 < orness < 1`.
pub fn maxent_weights(orness: f64, n: usize) -> Result<WeightVector> {
    check_range("orness", orness, 0.0, 1.0)?;
    if n < 2 {
        return Err(OwaError::Domain {
            name: "n",
            value: n as f64,
            min: 2.0,
            max: f64::INFINITY,
        });
    }
    if orness == 0.0 || orness == 1.0 {
        return Err(OwaError::Unsupported { orness });
    }
    if n == 2 {
        return WeightVector::new(vec![orness, 1.0 - orness]);
    }
    if orness == 0.5 {
        return Ok(WeightVector::uniform(n));
    }

    let alpha = if orness > 0.5 { orness } else { 1.0 - orness };
    or_like(alpha, orness, n)
}

/// Solves for `alpha > 0.5` and mirrors the result when the caller asked for
/// `requested = 1 - alpha`.
fn or_like(alpha: f64, requested: f64, n: usize) -> Result<WeightVector> {
    let nf = n as f64;
    let x = (nf - 1.0) * alpha;

    // polynomial divided through by x^(n-1) so it stays finite for large n
    let g = |w: f64| {
        let ratio = (x + 1.0 - nf * w) / x;
        let r_pow = ratio.powi(n as i32 - 1);
        let value = w * x * r_pow * ratio - ((x - nf) * w + 1.0);
        let slope = x * r_pow * ratio - nf * nf * w * r_pow - (x - nf);
        (value, slope)
    };

    let Some((lo, hi)) = bracket(&g, nf) else {
        return dual_fallback(alpha, n)
            .map(|w| if requested < 0.5 { w.reversed() } else { w })
            .and_then(|w| finish(w.into_vec(), requested, n));
    };

    let w1 = match newton_bisect(g, lo, hi, ROOT_TOLERANCE, ROOT_MAX_ITERATIONS) {
        Ok(root) => root.x,
        Err(RootError::MaxIterations { best }) => best.x,
        Err(e) => {
            return Err(unstable(requested, n, format!("root finder failed: {e:?}")));
        }
    };

    let wn = ((x - nf) * w1 + 1.0) / (x + 1.0 - nf * w1);
    if !(wn.is_finite() && wn > 0.0) {
        return Err(unstable(
            requested,
            n,
            format!("smallest weight evaluated to {wn:e} (cancellation in its numerator)"),
        ));
    }

    let (ln_first, ln_last) = (w1.ln(), wn.ln());
    let span = nf - 1.0;
    let mut w: Vec<f64> = (1..=n)
        .map(|j| (((nf - j as f64) * ln_first + (j as f64 - 1.0) * ln_last) / span).exp())
        .collect();
    if requested < 0.5 {
        w.reverse();
    }
    finish(w, requested, n)
}

/// Brackets the nontrivial root in `(1/n, 1]`, where `g < 0` just above the
/// double root at `1/n` and `g(1) > 0`.
fn bracket<G>(g: &G, nf: f64) -> Option<(f64, f64)>
where
    G: Fn(f64) -> (f64, f64),
{
    let start = 1.0 / nf;
    let mut hi = 1.0;
    if g(hi).0 <= 0.0 || g(hi).0.is_nan() {
        return None;
    }
    let mut offset = 1.0 - start;
    for _ in 0..64 {
        offset *= 0.5;
        let w = start + offset;
        if w <= start {
            break;
        }
        let v = g(w).0;
        if v < 0.0 {
            return Some((w, hi));
        }
        if v > 0.0 {
            hi = w;
        }
    }
    None
}

/// Direct maximization through the dual: `wᵢ ∝ exp(λ (n-i)/(n-1))`, with the
/// multiplier found by bisection on the (increasing) orness it produces.
fn dual_fallback(alpha: f64, n: usize) -> Result<WeightVector> {
    let weights = |lambda: f64| -> Vec<f64> {
        let span = (n - 1) as f64;
        let exps: Vec<f64> = (0..n).map(|i| lambda * (n - 1 - i) as f64 / span).collect();
        let top = exps.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let unnorm: Vec<f64> = exps.iter().map(|e| (e - top).exp()).collect();
        let z: f64 = unnorm.iter().sum();
        unnorm.into_iter().map(|u| u / z).collect()
    };
    let mut hi = 1.0;
    while raw_orness(&weights(hi)) < alpha {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(unstable(alpha, n, "dual multiplier diverged".to_string()));
        }
    }
    let mut lo = 0.0;
    for _ in 0..ROOT_MAX_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if raw_orness(&weights(mid)) < alpha {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-14 * hi.max(1.0) {
            break;
        }
    }
    let w = weights(0.5 * (lo + hi));
    let sum: f64 = w.iter().sum();
    WeightVector::new(w.into_iter().map(|x| x / sum).collect())
        .map_err(|_| unstable(alpha, n, "dual solution failed validation".to_string()))
}

fn finish(mut w: Vec<f64>, requested: f64, n: usize) -> Result<WeightVector> {
    if let Some(bad) = w
        .iter()
        .find(|x| !(x.is_finite() && (0.0..=1.0).contains(*x)))
    {
        return Err(unstable(
            requested,
            n,
            format!("weight {bad:e} outside [0, 1]"),
        ));
    }
    let sum: f64 = w.iter().sum();
    if (sum - 1.0).abs() > RAW_SUM_TOLERANCE {
        return Err(unstable(requested, n, format!("weights sum to {sum}")));
    }
    if (sum - 1.0).abs() > SUM_TOLERANCE {
        w.iter_mut().for_each(|x| *x /= sum);
    }
    let achieved = raw_orness(&w);
    let residual = (achieved - requested).abs();
    if residual > MAXENT_ORNESS_TOLERANCE {
        return Err(unstable(
            requested,
            n,
            format!("achieved orness {achieved} misses the request by {residual:e}"),
        ));
    }
    WeightVector::new(w).map_err(|e| unstable(requested, n, e.to_string()))
}

fn unstable(orness: f64, n: usize, reason: String) -> OwaError {
    OwaError::Unstable { orness, n, reason }
}
