//! Wall-clock comparison of the weight-generation methods.
//!
//! One timed run evaluates a method over the full 101-point orness grid.
//! Methods are interleaved within each repetition so slow drift of the
//! machine affects all of them alike. Nothing but weight generation happens
//! inside the timed region.

use std::hint::black_box;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use owa_weights::{
    baselines::exponential_nopreset, exponential_weights, linear_weights, maxent_weights,
    OrnessTarget,
};

use crate::error::CliError;
use crate::eval::orness_grid;
use crate::table::Method;

pub const GRID_POINTS: usize = 101;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub method: Method,
    pub beta: Option<f64>,
    pub n: usize,
    pub reps: usize,
    /// Mean seconds per run over the orness grid.
    pub mean_time: f64,
    /// `mean_time` over the fastest mean at the same `n`.
    pub relative_time: f64,
}

impl BenchRow {
    pub fn label(&self) -> String {
        match self.beta {
            Some(b) => format!("{} (beta={b})", self.method),
            None => self.method.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn rows_for(&self, n: usize) -> impl Iterator<Item = &BenchRow> {
        self.rows.iter().filter(move |r| r.n == n)
    }

    pub fn find(&self, n: usize, method: Method, beta: Option<f64>) -> Option<&BenchRow> {
        self.rows_for(n)
            .find(|r| r.method == method && r.beta == beta)
    }

    pub fn to_plain(&self) -> String {
        let mut out = format!(
            "{:<26} {:>6} {:>6} {:>14} {:>10}\n",
            "method", "n", "reps", "mean_time_s", "relative"
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:<26} {:>6} {:>6} {:>14.6e} {:>10.2}\n",
                r.label(),
                r.n,
                r.reps,
                r.mean_time,
                r.relative_time
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("method,beta,n,reps,mean_time,relative_time\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{:.16e},{:.16e}\n",
                r.method,
                r.beta.map(|b| b.to_string()).unwrap_or_default(),
                r.n,
                r.reps,
                r.mean_time,
                r.relative_time
            ));
        }
        out
    }
}

/// The six compared configurations: linear at three shape exponents,
/// calibrated and uncalibrated exponential, and maximum entropy.
pub fn bench_cases() -> Vec<(Method, Option<f64>)> {
    vec![
        (Method::Maxent, None),
        (Method::Exponential, None),
        (Method::ExponentialNoPreset, None),
        (Method::Linear, Some(1.0)),
        (Method::Linear, Some(1.25)),
        (Method::Linear, Some(1.5)),
    ]
}

fn run_once(method: Method, beta: Option<f64>, n: usize, grid: &[f64]) {
    for &o in grid {
        match method {
            Method::Linear => {
                let target = OrnessTarget::new(o, beta.unwrap_or(owa_weights::DEFAULT_BETA));
                let _ = black_box(target.and_then(|t| linear_weights(t, black_box(n))));
            }
            Method::Exponential => {
                let _ = black_box(exponential_weights(black_box(o), black_box(n)));
            }
            Method::ExponentialNoPreset => {
                let _ = black_box(exponential_nopreset(black_box(o), black_box(n)));
            }
            Method::Maxent => {
                let _ = black_box(maxent_weights(black_box(o), black_box(n)));
            }
        }
    }
}

pub fn run_bench(n_list: &[usize], reps: usize) -> Result<BenchReport, CliError> {
    if reps < 1 {
        return Err(CliError::Usage("--reps must be >= 1".into()));
    }
    if n_list.is_empty() {
        return Err(CliError::Usage("at least one --n is required".into()));
    }
    if let Some(&n) = n_list.iter().find(|&&n| n < 3) {
        return Err(CliError::Usage(format!("bench needs n >= 3, got {n}")));
    }

    let grid = orness_grid(0.0, 1.0, GRID_POINTS);
    let cases = bench_cases();
    let mut rows = Vec::new();
    for &n in n_list {
        for &(m, b) in &cases {
            run_once(m, b, n, &grid);
        }
        let mut totals = vec![0.0f64; cases.len()];
        for _ in 0..reps {
            for (slot, &(m, b)) in totals.iter_mut().zip(&cases) {
                let start = Instant::now();
                run_once(m, b, n, &grid);
                *slot += start.elapsed().as_secs_f64();
            }
        }
        let means: Vec<f64> = totals.iter().map(|t| t / reps as f64).collect();
        let fastest = means.iter().cloned().fold(f64::INFINITY, f64::min);
        for (&(method, beta), &mean) in cases.iter().zip(&means) {
            rows.push(BenchRow {
                method,
                beta,
                n,
                reps,
                mean_time: mean,
                relative_time: if mean == fastest { 1.0 } else { mean / fastest },
            });
        }
    }
    Ok(BenchReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoke_single_rep() {
        let report = run_bench(&[3], 1).unwrap();
        assert_eq!(report.rows.len(), 6);
        assert!(report.rows.iter().all(|r| r.reps == 1 && r.mean_time > 0.0));
        let ones = report
            .rows
            .iter()
            .filter(|r| r.relative_time == 1.0)
            .count();
        assert!(ones >= 1);
        assert!(report.rows.iter().all(|r| r.relative_time >= 1.0));
    }

    #[test]
    fn validates_arguments() {
        assert_eq!(run_bench(&[3], 0).unwrap_err().exit_code(), 2);
        assert_eq!(run_bench(&[2], 1).unwrap_err().exit_code(), 2);
        assert_eq!(run_bench(&[], 1).unwrap_err().exit_code(), 2);
    }
}
