//! Composite Simpson quadrature on uniform grids.

use std::f64::consts::TAU;

/// Default number of Simpson panels per 2π of integration length.
pub const DEFAULT_PANELS_PER_TAU: usize = 4096;

/// Uniform composite Simpson rule whose panel count scales with the length
/// of the integration interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub panels_per_tau: usize,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            panels_per_tau: DEFAULT_PANELS_PER_TAU,
        }
    }
}

impl Quadrature {
    pub fn new(panels_per_tau: usize) -> Self {
        Quadrature { panels_per_tau }
    }

    /// Even panel count used for an interval of the given length (at least 2).
    pub fn panels_for(&self, length: f64) -> usize {
        let raw = (self.panels_per_tau as f64 * length.abs() / TAU).ceil() as usize;
        let n = raw.max(2);
        n + n % 2
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        simpson(f, a, b, self.panels_for(b - a))
    }
}

/// Composite Simpson rule with `panels` sub-intervals (rounded up to even).
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let n = panels.max(2);
    let n = n + n % 2;
    let h = (b - a) / n as f64;
    let mut odd = 0.0;
    let mut even = 0.0;
    for i in 1..n {
        let x = a + h * i as f64;
        if i % 2 == 1 {
            odd += f(x);
        } else {
            even += f(x);
        }
    }
    h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even)
}

/// Running integrals of several integrands over a uniform grid of `intervals`
/// cells on `[a, b]`.
///
/// Each cell is integrated with Simpson's rule using its midpoint, so the
/// cumulative values at every node are fourth-order accurate. `f` writes the
/// `D` integrand values at `x` into its output slice. Returns the node
/// abscissae and, for each node, the integral from `a`.
pub fn cumulative_simpson<const D: usize, F>(
    f: F,
    a: f64,
    b: f64,
    intervals: usize,
) -> (Vec<f64>, Vec<[f64; D]>)
where
    F: Fn(f64) -> [f64; D],
{
    let n = intervals.max(1);
    let h = (b - a) / n as f64;
    let node = |i: usize| if i == n { b } else { a + h * i as f64 };
    let mut xs = Vec::with_capacity(n + 1);
    let mut acc = Vec::with_capacity(n + 1);
    let mut running = [0.0; D];
    let mut left = f(a);
    xs.push(a);
    acc.push(running);
    for i in 0..n {
        let x0 = node(i);
        let x1 = node(i + 1);
        let mid = f(0.5 * (x0 + x1));
        let right = f(x1);
        let w = (x1 - x0) / 6.0;
        for d in 0..D {
            running[d] += w * (left[d] + 4.0 * mid[d] + right[d]);
        }
        xs.push(x1);
        acc.push(running);
        left = right;
    }
    (xs, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn simpson_is_exact_for_cubics() {
        let v = simpson(|x| x * x * x - 2.0 * x + 1.0, 0.0, 2.0, 2);
        assert!((v - (4.0 - 4.0 + 2.0)).abs() < 1e-14);
    }

    #[test]
    fn odd_panel_counts_round_up() {
        assert_eq!(Quadrature::new(3).panels_for(TAU), 4);
        assert_eq!(Quadrature::new(4096).panels_for(TAU), 4096);
        assert_eq!(Quadrature::new(4096).panels_for(2.0 * TAU), 8192);
    }

    #[test]
    fn fourth_order_convergence() {
        let exact = 1.0 - (-1.0f64).exp();
        let e1 = (simpson(|x| (-x).exp(), 0.0, 1.0, 8) - exact).abs();
        let e2 = (simpson(|x| (-x).exp(), 0.0, 1.0, 16) - exact).abs();
        assert!(e1 / e2 > 14.0 && e1 / e2 < 18.0, "ratio {}", e1 / e2);
    }

    #[test]
    fn cumulative_matches_antiderivative() {
        let (xs, acc) = cumulative_simpson(|x| [x.cos(), x.sin()], 0.0, PI, 256);
        assert_eq!(xs.len(), 257);
        assert_eq!(xs[256], PI);
        for (x, v) in xs.iter().zip(&acc) {
            assert!((v[0] - x.sin()).abs() < 1e-10);
            assert!((v[1] - (1.0 - x.cos())).abs() < 1e-10);
        }
    }
}
