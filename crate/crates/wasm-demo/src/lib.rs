//! Browser bindings: weight vectors per method, orness sweeps for plotting,
//! and OWA aggregation of user-entered values.
//!
//! Build with `wasm-pack build --target web --out-dir www/pkg` and serve
//! `www/`.

use wasm_bindgen::prelude::*;

use owa_weights::baselines::exponential_nopreset;
use owa_weights::{
    aggregate, exponential_weights, linear_weights, maxent_weights, InputVector, OrnessTarget,
    WeightVector,
};

/// Values per orness point in [`sweep_curves`]: orness, then dispersion and
/// `w1` for linear, exponential and maxent.
pub const SWEEP_STRIDE: usize = 7;

pub fn method_weights(method: &str, n: usize, orness: f64, beta: f64) -> Result<Vec<f64>, String> {
    let w = match method {
        "linear" => OrnessTarget::new(orness, beta).and_then(|t| linear_weights(t, n)),
        "exp" => exponential_weights(orness, n).map(|(w, _)| w),
        "exp-nopreset" => exponential_nopreset(orness, n),
        "maxent" => maxent_weights(orness, n),
        other => return Err(format!("unknown method '{other}'")),
    };
    w.map(WeightVector::into_vec).map_err(|e| e.to_string())
}

/// Flattened table with [`SWEEP_STRIDE`] entries per orness point. Failed
/// evaluations (maxent at the extremes) are NaN.
pub fn sweep_curves(n: usize, beta: f64, steps: usize) -> Result<Vec<f64>, String> {
    if steps < 2 {
        return Err("steps must be at least 2".into());
    }
    OrnessTarget::new(0.5, beta).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(steps * SWEEP_STRIDE);
    for k in 0..steps {
        let o = k as f64 / (steps - 1) as f64;
        out.push(o);
        let results = [
            OrnessTarget::new(o, beta).and_then(|t| linear_weights(t, n)),
            exponential_weights(o, n).map(|(w, _)| w),
            maxent_weights(o, n),
        ];
        for r in results {
            match r {
                Ok(w) => {
                    out.push(w.dispersion());
                    out.push(w.as_slice()[0]);
                }
                Err(_) => out.extend([f64::NAN, f64::NAN]),
            }
        }
    }
    Ok(out)
}

pub fn aggregate_values(weights: &[f64], values: &[f64]) -> Result<f64, String> {
    let w = WeightVector::new(weights.to_vec()).map_err(|e| e.to_string())?;
    let x = InputVector::new(values.to_vec()).map_err(|e| e.to_string())?;
    aggregate(&w, &x).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = weights)]
pub fn weights_js(method: &str, n: usize, orness: f64, beta: f64) -> Result<Vec<f64>, JsValue> {
    method_weights(method, n, orness, beta).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = sweepCurves)]
pub fn sweep_curves_js(n: usize, beta: f64, steps: usize) -> Result<Vec<f64>, JsValue> {
    sweep_curves(n, beta, steps).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = aggregate)]
pub fn aggregate_js(weights: &[f64], values: &[f64]) -> Result<f64, JsValue> {
    aggregate_values(weights, values).map_err(|e| JsValue::from_str(&e))
}
