use std::io::Write;
use std::path::Path;

use owa_weights::{
    baselines::exponential_nopreset, exponential_weights, linear_weights, maxent_weights,
    OrnessTarget, OwaError, WeightVector,
};

use crate::error::CliError;
use crate::table::{Method, Status, SweepRow, SweepTable};

/// Largest orness miss still reported as `ok` in a sweep table.
pub const OK_TOLERANCE: f64 = 1e-6;

/// Runs one method at one orness. Method-level failures (unsupported,
/// unstable, uncalibrated) become row statuses; invalid parameters are
/// returned as errors.
pub fn evaluate(method: Method, n: usize, orness: f64, beta: f64) -> Result<SweepRow, CliError> {
    let produced: Result<WeightVector, OwaError> = match method {
        Method::Linear => linear_weights(OrnessTarget::new(orness, beta)?, n),
        Method::Exponential => exponential_weights(orness, n).map(|(w, _)| w),
        Method::ExponentialNoPreset => exponential_nopreset(orness, n),
        Method::Maxent => maxent_weights(orness, n),
    };
    let beta = (method == Method::Linear).then_some(beta);
    let failed = |status: Status, e: OwaError| SweepRow {
        method,
        beta,
        n,
        requested_orness: orness,
        achieved_orness: None,
        dispersion: None,
        status,
        w: Vec::new(),
        message: Some(e.to_string()),
    };
    match produced {
        Ok(w) => {
            let achieved = w.orness();
            let status = if (achieved - orness).abs() <= OK_TOLERANCE {
                Status::Ok
            } else {
                Status::Uncalibrated
            };
            Ok(SweepRow {
                method,
                beta,
                n,
                requested_orness: orness,
                achieved_orness: Some(achieved),
                dispersion: Some(w.dispersion()),
                status,
                w: w.into_vec(),
                message: None,
            })
        }
        Err(e @ OwaError::Unsupported { .. }) => Ok(failed(Status::Unsupported, e)),
        Err(e @ (OwaError::Unstable { .. } | OwaError::Calibration { .. })) => {
            Ok(failed(Status::Unstable, e))
        }
        Err(e) => Err(e.into()),
    }
}

/// `steps` evenly spaced orness values from `lo` to `hi`, endpoints exact.
pub fn orness_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    assert!(steps >= 2);
    let last = steps - 1;
    (0..steps)
        .map(|k| {
            if k == last {
                hi
            } else {
                lo + (hi - lo) * k as f64 / last as f64
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub n: usize,
    pub methods: Vec<Method>,
    /// Only used by the linear method.
    pub betas: Vec<f64>,
    pub steps: usize,
    pub min_orness: f64,
    pub max_orness: f64,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.steps < 2 {
            return Err(CliError::Usage(format!(
                "--steps must be >= 2, got {}",
                self.steps
            )));
        }
        if self.methods.is_empty() {
            return Err(CliError::Usage("at least one method is required".into()));
        }
        if self.methods.contains(&Method::Linear) && self.betas.is_empty() {
            return Err(CliError::Usage(
                "the linear method needs at least one beta".into(),
            ));
        }
        let in_unit = |x: f64| (0.0..=1.0).contains(&x);
        if !(in_unit(self.min_orness)
            && in_unit(self.max_orness)
            && self.min_orness <= self.max_orness)
        {
            return Err(CliError::Usage(format!(
                "orness range [{}, {}] must satisfy 0 <= min <= max <= 1",
                self.min_orness, self.max_orness
            )));
        }
        Ok(())
    }

    /// `#` comment line recording tool version and parameters.
    pub fn provenance(&self) -> String {
        let methods: Vec<&str> = self.methods.iter().map(|m| m.name()).collect();
        let betas: Vec<String> = self.betas.iter().map(|b| b.to_string()).collect();
        format!(
            "owa-cli {} sweep n={} methods={} betas={} steps={} orness=[{},{}]",
            env!("CARGO_PKG_VERSION"),
            self.n,
            methods.join(";"),
            betas.join(";"),
            self.steps,
            self.min_orness,
            self.max_orness
        )
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepTable, CliError> {
    config.validate()?;
    let grid = orness_grid(config.min_orness, config.max_orness, config.steps);
    let mut methods = config.methods.clone();
    methods.sort();
    methods.dedup();

    let mut rows = Vec::new();
    for &method in &methods {
        let betas: &[f64] = if method == Method::Linear {
            &config.betas
        } else {
            &[owa_weights::DEFAULT_BETA]
        };
        for &beta in betas {
            for &o in &grid {
                rows.push(evaluate(method, config.n, o, beta)?);
            }
        }
    }
    let mut table = SweepTable { n: config.n, rows };
    table.sort();
    Ok(table)
}

/// Writes `contents` next to `path` and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let display = path.display().to_string();
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| CliError::io(format!("cannot create temporary file for {display}"), e))?;
    tmp.write_all(contents.as_bytes())
        .and_then(|_| tmp.flush())
        .map_err(|e| CliError::io(format!("cannot write {display}"), e))?;
    tmp.persist(path)
        .map_err(|e| CliError::io(format!("cannot move output into {display}"), e.error))?;
    Ok(())
}
