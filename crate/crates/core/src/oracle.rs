//! Slow, independent reference computations for the test suites.
//!
//! Nothing here shares a code path with [`crate::linear`] or
//! [`crate::baselines`]: the power sums are accumulated by loops and the
//! entropy maximum is located by exhaustive search.

use crate::owa::WeightVector;

/// Coefficients and right-hand side of a 2×2 linear system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct System2x2 {
    pub a11: f64,
    pub a12: f64,
    pub a21: f64,
    pub a22: f64,
    pub r1: f64,
    pub r2: f64,
}

impl System2x2 {
    pub fn determinant(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    /// Cramer's rule. Panics on a singular matrix.
    pub fn solve(&self) -> (f64, f64) {
        let det = self.determinant();
        assert!(det.abs() > 1e-14, "singular 2x2 system (det = {det:e})");
        let x1 = (self.r1 * self.a22 - self.a12 * self.r2) / det;
        let x2 = (self.a11 * self.r2 - self.r1 * self.a21) / det;
        (x1, x2)
    }
}

/// Assembles the sum and orness constraints on the weight line from
/// explicitly summed power sums and solves them for `(K, b)`.
pub fn assemble_system(alpha: f64, n: usize, beta: f64) -> System2x2 {
    assert!(n >= 3, "oracle needs n >= 3");
    assert!((0.0..=0.5).contains(&alpha));
    let m = n - 1;
    let nf = n as f64;
    let mf = m as f64;

    let mut sum_i = 0.0;
    let mut sum_i2 = 0.0;
    let mut sum_n = 0.0;
    for i in 1..=m {
        let i = i as f64;
        sum_i += i;
        sum_i2 += i * i;
        sum_n += nf;
    }

    let f = 1.0 - (1.0 - 2.0 * alpha).powf(beta);
    let delta = f * mf / nf;

    System2x2 {
        a11: sum_i,
        a12: mf,
        a21: (nf * sum_i - sum_i2) / mf,
        a22: (sum_n - sum_i) / mf,
        r1: delta,
        r2: alpha,
    }
}

/// `(K, b)` by Cramer's rule on the loop-assembled system.
pub fn solve_system_oracle(alpha: f64, n: usize, beta: f64) -> (f64, f64) {
    assemble_system(alpha, n, beta).solve()
}

/// Full weight vector from the oracle's `(K, b)`, mirrored for or-like
/// targets.
pub fn linear_weights_oracle(orness: f64, n: usize, beta: f64) -> Vec<f64> {
    let alpha = if orness > 0.5 { 1.0 - orness } else { orness };
    let (k, b) = solve_system_oracle(alpha, n, beta);
    let line: f64 = (1..n).map(|i| k * i as f64 + b).sum();
    let mut w: Vec<f64> = (1..n).map(|i| k * i as f64 + b).collect();
    w.push(1.0 - line);
    if orness > 0.5 {
        w.reverse();
    }
    w
}

fn entropy(w: &[f64]) -> f64 {
    -w.iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| x * x.ln())
        .sum::<f64>()
}

/// Completes free weights `w₁…wₙ₋₂` with the two weights that satisfy the
/// orness and sum constraints; `None` if infeasible.
fn complete(free: &[f64], orness: f64, n: usize) -> Option<Vec<f64>> {
    // Σ (n-i) wᵢ = orness (n-1); the coefficient of wₙ₋₁ is 1, of wₙ is 0
    let weighted: f64 = free
        .iter()
        .enumerate()
        .map(|(i, &w)| (n - 1 - i) as f64 * w)
        .sum();
    let w_pen = orness * (n - 1) as f64 - weighted;
    let w_last = 1.0 - free.iter().sum::<f64>() - w_pen;
    if w_pen < 0.0 || w_last < 0.0 || free.iter().any(|&w| w < 0.0) {
        return None;
    }
    let mut w = free.to_vec();
    w.push(w_pen);
    w.push(w_last);
    Some(w)
}

/// Highest-dispersion weight vector with the given orness for `n ≤ 5`,
/// found by a grid over the free weights followed by pattern-search
/// refinement. Grid order and first-found tie breaking make it deterministic.
pub fn maxent_oracle(orness: f64, n: usize, grid_steps: usize) -> WeightVector {
    assert!((2..=5).contains(&n), "maxent oracle supports 2 <= n <= 5");
    assert!(orness > 0.0 && orness < 1.0);
    assert!(grid_steps >= 100);
    let free_dims = n - 2;

    let mut best: Option<(f64, Vec<f64>)> = None;
    let consider = |free: &[f64], best: &mut Option<(f64, Vec<f64>)>| {
        if let Some(w) = complete(free, orness, n) {
            let h = entropy(&w);
            if best.as_ref().is_none_or(|(bh, _)| h > *bh) {
                *best = Some((h, free.to_vec()));
            }
        }
    };

    let step = 1.0 / grid_steps as f64;
    let mut idx = vec![0usize; free_dims];
    loop {
        let free: Vec<f64> = idx.iter().map(|&k| k as f64 * step).collect();
        if free.iter().sum::<f64>() <= 1.0 + 1e-12 {
            consider(&free, &mut best);
        }
        // odometer increment
        let mut d = 0;
        while d < free_dims {
            idx[d] += 1;
            if idx[d] <= grid_steps {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
        if d == free_dims {
            break;
        }
    }

    let (mut best_h, mut point) = best.expect("no feasible point for orness in (0, 1)");
    let mut delta = step;
    while delta > 1e-13 {
        let mut improved = false;
        for d in 0..free_dims {
            for sign in [1.0, -1.0] {
                let mut trial = point.clone();
                trial[d] += sign * delta;
                if let Some(w) = complete(&trial, orness, n) {
                    let h = entropy(&w);
                    if h > best_h {
                        best_h = h;
                        point = trial;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            delta *= 0.5;
        }
    }

    let w = complete(&point, orness, n).expect("refined point stays feasible");
    let sum: f64 = w.iter().sum();
    WeightVector::new(w.iter().map(|x| (x / sum).max(0.0)).collect())
        .expect("oracle produced an invalid weight vector")
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn uniform_and_empty_solutions() {
        let (k, b) = solve_system_oracle(0.5, 5, 1.5);
        assert_abs_diff_eq!(k, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b, 0.2, epsilon = 1e-15);
        let (k, b) = solve_system_oracle(0.0, 5, 1.5);
        assert_abs_diff_eq!(k, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn derived_point() {
        let (k, b) = solve_system_oracle(0.4, 5, 1.5);
        assert_abs_diff_eq!(k, 0.044_222_912_4, epsilon = 1e-10);
        assert_abs_diff_eq!(b, 0.071_554_175_3, epsilon = 1e-10);
    }

    #[test]
    fn system_is_never_singular() {
        for n in 3..200 {
            assert!(assemble_system(0.3, n, 1.5).determinant().abs() > 1e-14);
        }
    }

    #[test]
    fn maxent_oracle_trivial_cases() {
        let w = maxent_oracle(0.5, 3, 100);
        for &x in w.as_slice() {
            assert_abs_diff_eq!(x, 1.0 / 3.0, epsilon = 1e-6);
        }
        let w = maxent_oracle(0.75, 2, 100);
        assert_abs_diff_eq!(w.as_slice()[0], 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(w.as_slice()[1], 0.25, epsilon = 1e-12);
    }

    #[test]
    fn maxent_oracle_keeps_orness() {
        let w = maxent_oracle(0.3, 4, 100);
        assert_abs_diff_eq!(w.orness(), 0.3, epsilon = 1e-6);
    }
}
