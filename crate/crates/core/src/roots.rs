//! Inversion of strictly increasing scalar functions.

use crate::error::{Error, Result};

const MAX_ITER: usize = 200;

/// Solves `f(x) = target` for a strictly increasing `f` on `[lo, hi]`.
///
/// Newton steps use the supplied derivative `df`; a step that leaves the
/// current bracket, or fails to halve it, is replaced by bisection. Stops once
/// the bracket or the Newton step is below `tol`.
pub fn invert_increasing<F, D>(f: F, df: D, target: f64, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = (lo, hi);
    let flo = f(lo) - target;
    let fhi = f(hi) - target;
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo > 0.0 || fhi < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "target {target} is not bracketed by [{lo}, {hi}]"
        )));
    }
    let mut x = 0.5 * (lo + hi);
    let mut step = hi - lo;
    let mut prev_step = step;
    for _ in 0..MAX_ITER {
        let fx = f(x) - target;
        if fx == 0.0 {
            return Ok(x);
        }
        if fx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let d = df(x);
        let newton = x - fx / d;
        let accept =
            d > 0.0 && newton > lo && newton < hi && (2.0 * fx).abs() <= (prev_step * d).abs();
        prev_step = step;
        if accept {
            step = fx / d;
            x = newton;
        } else {
            step = 0.5 * (hi - lo);
            x = lo + step;
        }
        if step.abs() <= tol || hi - lo <= tol {
            return Ok(x);
        }
    }
    Ok(x)
}

/// Widens `[guess - step, guess + step]` geometrically until an increasing
/// function brackets `target`.
pub fn bracket_increasing<F: Fn(f64) -> f64>(
    f: F,
    target: f64,
    guess: f64,
    step: f64,
) -> Result<(f64, f64)> {
    let mut step = step.abs().max(f64::EPSILON);
    for _ in 0..64 {
        let lo = guess - step;
        let hi = guess + step;
        if f(lo) <= target && f(hi) >= target {
            return Ok((lo, hi));
        }
        step *= 2.0;
    }
    Err(Error::NumericRange(format!(
        "could not bracket target {target}"
    )))
}
