//! Safeguarded scalar root finding: Newton steps inside a sign-change
//! bracket, falling back to bisection whenever a step leaves the bracket or
//! fails to shrink it fast enough.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RootError {
    /// `f(lo)` and `f(hi)` have the same sign.
    NotBracketed { f_lo: f64, f_hi: f64 },
    /// A function value was NaN or infinite.
    NonFinite { x: f64 },
    /// Iteration cap reached before the bracket shrank below tolerance.
    MaxIterations { best: Root },
}

/// Finds a root of `f` in `[lo, hi]`. `f` returns `(value, derivative)`.
pub fn newton_bisect<F>(
    f: F,
    mut lo: f64,
    mut hi: f64,
    xtol: f64,
    max_iter: usize,
) -> Result<Root, RootError>
where
    F: Fn(f64) -> (f64, f64),
{
    let (f_lo, _) = f(lo);
    let (f_hi, _) = f(hi);
    if !f_lo.is_finite() {
        return Err(RootError::NonFinite { x: lo });
    }
    if !f_hi.is_finite() {
        return Err(RootError::NonFinite { x: hi });
    }
    if f_lo == 0.0 {
        return Ok(Root {
            x: lo,
            residual: 0.0,
            iterations: 0,
        });
    }
    if f_hi == 0.0 {
        return Ok(Root {
            x: hi,
            residual: 0.0,
            iterations: 0,
        });
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(RootError::NotBracketed { f_lo, f_hi });
    }
    // orient so that f(lo) < 0 < f(hi)
    if f_lo > 0.0 {
        std::mem::swap(&mut lo, &mut hi);
    }

    let mut x = 0.5 * (lo + hi);
    let mut step_before_last = (hi - lo).abs();
    let mut last_step = step_before_last;
    let (mut fx, mut dfx) = f(x);

    for it in 1..=max_iter {
        if !fx.is_finite() {
            return Err(RootError::NonFinite { x });
        }
        if fx == 0.0 {
            return Ok(Root {
                x,
                residual: 0.0,
                iterations: it,
            });
        }
        if fx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }

        let newton = x - fx / dfx;
        let inside = dfx.is_finite() && dfx != 0.0 && (newton - lo) * (newton - hi) < 0.0;
        let slow = (2.0 * fx).abs() > (step_before_last * dfx).abs();
        step_before_last = last_step;
        let next = if inside && !slow {
            newton
        } else {
            0.5 * (lo + hi)
        };
        last_step = (next - x).abs();
        x = next;
        (fx, dfx) = f(x);

        if last_step < xtol || (hi - lo).abs() < xtol {
            return Ok(Root {
                x,
                residual: fx,
                iterations: it,
            });
        }
    }
    Err(RootError::MaxIterations {
        best: Root {
            x,
            residual: fx,
            iterations: max_iter,
        },
    })
}

/// Plain bisection on a function known to be monotone over `[lo, hi]`.
/// Returns the midpoint of the final bracket and the iteration count.
pub fn bisect_monotone<F>(
    f: F,
    mut lo: f64,
    mut hi: f64,
    xtol: f64,
    max_iter: usize,
) -> (f64, usize, bool)
where
    F: Fn(f64) -> f64,
{
    let increasing = f(hi) >= f(lo);
    for it in 1..=max_iter {
        let mid = 0.5 * (lo + hi);
        let v = f(mid);
        if (v < 0.0) == increasing {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo).abs() <= xtol {
            return (0.5 * (lo + hi), it, true);
        }
    }
    (0.5 * (lo + hi), max_iter, false)
}
