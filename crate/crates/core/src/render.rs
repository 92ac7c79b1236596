//! Rendering log-radius profiles into sampled plane curves.
//!
//! With the tangent angle as parameter the velocity is
//! `Γ'(θ) = r(θ)·(cos θ, sin θ)`, so the curve is recovered by integrating
//! `exp(l(θ))·(cos θ, sin θ)` from the start of the domain.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::profile::LogRadiusProfile;
use crate::quadrature::cumulative_simpson;

pub const DEFAULT_SAMPLES_PER_TAU: usize = 4096;
pub const MIN_SAMPLES_PER_TAU: usize = 16;
/// Relative endpoint gap below which a rendered curve is flagged closed.
pub const DEFAULT_CLOSURE_TOLERANCE: f64 = 1e-6;

/// Largest log-radius accepted before `exp` is considered out of range.
const MAX_LOG_RADIUS: f64 = 700.0;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn distance(&self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Rotation by `angle` about `center`.
    pub fn rotate_about(&self, center: Point, angle: f64) -> Point {
        let (s, c) = angle.sin_cos();
        let dx = self.x - center.x;
        let dy = self.y - center.y;
        Point::new(center.x + c * dx - s * dy, center.y + s * dx + c * dy)
    }
}

/// A sampled plane curve with its parameter and cumulative arc length at
/// each sample.
///
/// For curves rendered from log-radius profiles the parameter is the tangent
/// angle θ; for curves rendered from angle profiles it is the normalized arc
/// length.
#[derive(Debug, Clone, PartialEq)]
pub struct PlaneCurve {
    points: Vec<Point>,
    params: Vec<f64>,
    arc_lengths: Vec<f64>,
    closed: bool,
}

impl PlaneCurve {
    pub fn new(
        points: Vec<Point>,
        params: Vec<f64>,
        arc_lengths: Vec<f64>,
        closed: bool,
    ) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::DegenerateCurve(format!(
                "{} points, need at least 2",
                points.len()
            )));
        }
        if params.len() != points.len() || arc_lengths.len() != points.len() {
            return Err(Error::InvalidParameter(format!(
                "length mismatch: {} points, {} params, {} arc lengths",
                points.len(),
                params.len(),
                arc_lengths.len()
            )));
        }
        if points.iter().any(|p| !(p.x.is_finite() && p.y.is_finite())) {
            return Err(Error::NumericRange("non-finite curve point".into()));
        }
        if params.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidParameter(
                "parameters must be strictly increasing".into(),
            ));
        }
        if arc_lengths.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::InvalidParameter(
                "arc lengths must be strictly increasing".into(),
            ));
        }
        Ok(PlaneCurve {
            points,
            params,
            arc_lengths,
            closed,
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn arc_lengths(&self) -> &[f64] {
        &self.arc_lengths
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub(crate) fn with_closed(mut self, closed: bool) -> Self {
        self.closed = closed;
        self
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn total_length(&self) -> f64 {
        self.arc_lengths[self.arc_lengths.len() - 1] - self.arc_lengths[0]
    }

    /// Diagonal of the axis-aligned bounding box, used as the curve diameter.
    pub fn diameter(&self) -> f64 {
        let (mut x0, mut y0, mut x1, mut y1) = (
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        );
        for p in &self.points {
            x0 = x0.min(p.x);
            y0 = y0.min(p.y);
            x1 = x1.max(p.x);
            y1 = y1.max(p.y);
        }
        (x1 - x0).hypot(y1 - y0)
    }

    fn checked_diameter(&self) -> Result<f64> {
        let d = self.diameter();
        if d > 0.0 && d.is_finite() {
            Ok(d)
        } else {
            Err(Error::DegenerateCurve("zero diameter".into()))
        }
    }

    /// Mean of the points weighted by arc length (trapezoidal weights).
    pub fn centroid(&self) -> Point {
        let mut sx = 0.0;
        let mut sy = 0.0;
        let mut total = 0.0;
        for i in 0..self.points.len() - 1 {
            let w = self.arc_lengths[i + 1] - self.arc_lengths[i];
            let (a, b) = (self.points[i], self.points[i + 1]);
            sx += w * 0.5 * (a.x + b.x);
            sy += w * 0.5 * (a.y + b.y);
            total += w;
        }
        Point::new(sx / total, sy / total)
    }

    /// Applies `p ↦ center_to + scale·R(angle)(p − center_from)` to every
    /// point; arc lengths scale by `|scale|`.
    pub fn transformed(
        &self,
        center_from: Point,
        angle: f64,
        scale: f64,
        center_to: Point,
    ) -> PlaneCurve {
        let (s, c) = angle.sin_cos();
        let points = self
            .points
            .iter()
            .map(|p| {
                let dx = p.x - center_from.x;
                let dy = p.y - center_from.y;
                Point::new(
                    center_to.x + scale * (c * dx - s * dy),
                    center_to.y + scale * (s * dx + c * dy),
                )
            })
            .collect();
        PlaneCurve {
            points,
            params: self.params.clone(),
            arc_lengths: self.arc_lengths.iter().map(|s| s * scale.abs()).collect(),
            closed: self.closed,
        }
    }

    /// Distance from `p` to the nearest point of this polyline.
    pub fn distance_to(&self, p: Point) -> f64 {
        SegmentIndex::new(&self.points).nearest_distance(p)
    }
}

/// Renders `profile` over its domain with `samples_per_tau` uniform θ-cells
/// per 2π, starting at the origin.
pub fn render(profile: &LogRadiusProfile, samples_per_tau: usize) -> Result<PlaneCurve> {
    render_with_tolerance(profile, samples_per_tau, DEFAULT_CLOSURE_TOLERANCE)
}

pub fn render_with_tolerance(
    profile: &LogRadiusProfile,
    samples_per_tau: usize,
    closure_tolerance: f64,
) -> Result<PlaneCurve> {
    if samples_per_tau < MIN_SAMPLES_PER_TAU {
        return Err(Error::InvalidParameter(format!(
            "samples_per_tau must be at least {MIN_SAMPLES_PER_TAU}, got {samples_per_tau}"
        )));
    }
    let domain = profile.domain();
    let cells = ((samples_per_tau as f64 * domain.length() / TAU).ceil() as usize).max(2);

    // Cheap range check on the grid before integrating.
    let h = domain.length() / (2 * cells) as f64;
    let (low, peak) = (0..=2 * cells)
        .map(|i| profile.evaluate_unchecked(domain.start() + h * i as f64))
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    if !(peak <= MAX_LOG_RADIUS && low >= -MAX_LOG_RADIUS) {
        return Err(Error::NumericRange(format!(
            "log-radius spans [{low}, {peak}], exp leaves the f64 range"
        )));
    }

    let (params, acc) = cumulative_simpson(
        |t| {
            let r = profile.evaluate_unchecked(t).exp();
            let (s, c) = t.sin_cos();
            [r * c, r * s, r]
        },
        domain.start(),
        domain.end(),
        cells,
    );
    let points = acc.iter().map(|v| Point::new(v[0], v[1])).collect();
    let arc_lengths = acc.iter().map(|v| v[2]).collect();
    let curve = PlaneCurve::new(points, params, arc_lengths, false)?;
    let closed = closure_gap(&curve)? <= closure_tolerance;
    Ok(curve.with_closed(closed))
}

/// Endpoint gap relative to the curve diameter.
pub fn closure_gap(curve: &PlaneCurve) -> Result<f64> {
    let d = curve.checked_diameter()?;
    let first = curve.points[0];
    let last = curve.points[curve.points.len() - 1];
    Ok(first.distance(last) / d)
}

/// Mean distance from the curve rotated by `2π/m` about its centroid to the
/// original polyline, relative to the diameter.
pub fn rotational_symmetry_error(curve: &PlaneCurve, m: u32) -> Result<f64> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "symmetry order must be at least 2, got {m}"
        )));
    }
    if !curve.closed {
        return Err(Error::CurveNotClosed);
    }
    let d = curve.checked_diameter()?;
    let center = curve.centroid();
    let angle = TAU / m as f64;
    let index = SegmentIndex::new(&curve.points);
    let total: f64 = curve
        .points
        .iter()
        .map(|p| index.nearest_distance(p.rotate_about(center, angle)))
        .sum();
    Ok(total / curve.points.len() as f64 / d)
}

/// Translates the centroid to the origin and scales so the farthest point is
/// at distance 1.
pub fn normalize(curve: &PlaneCurve) -> Result<PlaneCurve> {
    curve.checked_diameter()?;
    let center = curve.centroid();
    let reach = curve
        .points
        .iter()
        .map(|p| p.distance(center))
        .fold(0.0, f64::max);
    if !(reach > 0.0) {
        return Err(Error::DegenerateCurve(
            "all points coincide with the centroid".into(),
        ));
    }
    Ok(curve.transformed(center, 0.0, 1.0 / reach, Point::default()))
}

fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    let t = if len2 > 0.0 {
        (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    p.distance(Point::new(a.x + t * dx, a.y + t * dy))
}

/// Uniform grid over polyline segments for nearest-distance queries.
struct SegmentIndex<'a> {
    points: &'a [Point],
    origin: Point,
    cell: f64,
    nx: usize,
    ny: usize,
    cells: Vec<Vec<u32>>,
}

impl<'a> SegmentIndex<'a> {
    fn new(points: &'a [Point]) -> Self {
        let (mut x0, mut y0, mut x1, mut y1) = (
            f64::INFINITY,
            f64::INFINITY,
            f64::NEG_INFINITY,
            f64::NEG_INFINITY,
        );
        for p in points {
            x0 = x0.min(p.x);
            y0 = y0.min(p.y);
            x1 = x1.max(p.x);
            y1 = y1.max(p.y);
        }
        let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
        let per_side = ((points.len() as f64).sqrt().ceil() as usize).clamp(1, 1024);
        let cell = span / per_side as f64;
        let nx = (((x1 - x0) / cell).floor() as usize + 1).min(per_side + 1);
        let ny = (((y1 - y0) / cell).floor() as usize + 1).min(per_side + 1);
        let mut index = SegmentIndex {
            points,
            origin: Point::new(x0, y0),
            cell,
            nx,
            ny,
            cells: vec![Vec::new(); nx * ny],
        };
        for i in 0..points.len().saturating_sub(1) {
            let (a, b) = (points[i], points[i + 1]);
            let (cx0, cy0) = index.cell_of(Point::new(a.x.min(b.x), a.y.min(b.y)));
            let (cx1, cy1) = index.cell_of(Point::new(a.x.max(b.x), a.y.max(b.y)));
            for cy in cy0..=cy1 {
                for cx in cx0..=cx1 {
                    index.cells[cy * nx + cx].push(i as u32);
                }
            }
        }
        index
    }

    fn cell_of(&self, p: Point) -> (usize, usize) {
        let cx = ((p.x - self.origin.x) / self.cell)
            .floor()
            .clamp(0.0, (self.nx - 1) as f64) as usize;
        let cy = ((p.y - self.origin.y) / self.cell)
            .floor()
            .clamp(0.0, (self.ny - 1) as f64) as usize;
        (cx, cy)
    }

    fn nearest_distance(&self, p: Point) -> f64 {
        if self.points.len() == 1 {
            return p.distance(self.points[0]);
        }
        let (cx, cy) = self.cell_of(p);
        let max_ring = self.nx.max(self.ny);
        let mut best = f64::INFINITY;
        for ring in 0..=max_ring {
            let x_lo = cx as isize - ring as isize;
            let x_hi = cx as isize + ring as isize;
            let y_lo = cy as isize - ring as isize;
            let y_hi = cy as isize + ring as isize;
            for gy in y_lo..=y_hi {
                for gx in x_lo..=x_hi {
                    let on_ring = gx == x_lo || gx == x_hi || gy == y_lo || gy == y_hi;
                    if !on_ring
                        || gx < 0
                        || gy < 0
                        || gx >= self.nx as isize
                        || gy >= self.ny as isize
                    {
                        continue;
                    }
                    for &seg in &self.cells[gy as usize * self.nx + gx as usize] {
                        let seg = seg as usize;
                        best = best.min(point_segment_distance(
                            p,
                            self.points[seg],
                            self.points[seg + 1],
                        ));
                    }
                }
            }
            // Unvisited cells are at least this far from p.
            let bound = self.outside_distance(p).hypot(ring as f64 * self.cell);
            if best <= bound {
                break;
            }
        }
        best
    }

    fn outside_distance(&self, p: Point) -> f64 {
        let x_end = self.origin.x + self.nx as f64 * self.cell;
        let y_end = self.origin.y + self.ny as f64 * self.cell;
        let dx = (self.origin.x - p.x).max(p.x - x_end).max(0.0);
        let dy = (self.origin.y - p.y).max(p.y - y_end).max(0.0);
        dx.max(dy)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::{Frequency, Interval};
    use std::f64::consts::PI;

    fn elem(m: u32, n: u32, eps: f64) -> LogRadiusProfile {
        LogRadiusProfile::elementary(Frequency::rational(m, n).unwrap(), eps, 0.0).unwrap()
    }

    #[test]
    fn unit_circle_from_origin() {
        let curve = render(&LogRadiusProfile::unit_circle(), 4096).unwrap();
        let center = Point::new(0.0, 1.0);
        let dev = curve
            .points()
            .iter()
            .map(|p| (p.distance(center) - 1.0).abs())
            .fold(0.0, f64::max);
        assert!(dev < 1e-9, "{dev}");
        for (p, t) in curve.points().iter().zip(curve.params()) {
            assert!((p.x - t.sin()).abs() < 1e-12 && (p.y - (1.0 - t.cos())).abs() < 1e-12);
        }
        assert!(curve.is_closed());
        assert!((curve.total_length() - TAU).abs() < 1e-12);
    }

    #[test]
    fn rejects_too_few_samples() {
        assert!(render(&LogRadiusProfile::unit_circle(), 8).is_err());
    }

    #[test]
    fn overflow_is_a_numeric_range_error() {
        let p = LogRadiusProfile::uniform_scale(800.0).unwrap();
        assert!(matches!(render(&p, 64), Err(Error::NumericRange(_))));
    }

    #[test]
    fn oval_closes() {
        let curve = render(&elem(2, 1, 0.1), 4096).unwrap();
        assert!(closure_gap(&curve).unwrap() < 1e-6);
        assert!(curve.is_closed());
    }

    #[test]
    fn half_frequency_does_not_close() {
        let curve = render(&elem(1, 2, 0.3), 4096).unwrap();
        assert!(closure_gap(&curve).unwrap() > 1e-2);
        assert!(!curve.is_closed());
        assert_eq!(
            rotational_symmetry_error(&curve, 2),
            Err(Error::CurveNotClosed)
        );
    }

    #[test]
    fn circle_has_every_rotational_symmetry() {
        let curve = render(&LogRadiusProfile::unit_circle(), 4096).unwrap();
        for m in 2..9 {
            assert!(rotational_symmetry_error(&curve, m).unwrap() < 1e-6);
        }
    }

    #[test]
    fn pentagon_symmetry_orders() {
        let p = LogRadiusProfile::elementary(Frequency::integer(5).unwrap(), 0.3, 0.0).unwrap();
        let curve = render(&p, 4096).unwrap();
        let right = rotational_symmetry_error(&curve, 5).unwrap();
        let wrong = rotational_symmetry_error(&curve, 4).unwrap();
        assert!(right < 1e-4, "{right}");
        // The support function damps the ν = 5 harmonic by 1/24, so the
        // wrong-order error is a few 1e-3 rather than 1e-2.
        assert!(wrong > 1e-3 && wrong > 1e3 * right, "{wrong}");
    }

    #[test]
    fn degenerate_curves() {
        let pts = vec![Point::new(1.0, 1.0); 3];
        let curve = PlaneCurve::new(pts, vec![0.0, 1.0, 2.0], vec![0.0, 1.0, 2.0], true).unwrap();
        assert!(matches!(
            closure_gap(&curve),
            Err(Error::DegenerateCurve(_))
        ));
        assert!(normalize(&curve).is_err());
    }

    #[test]
    fn invariants_are_checked() {
        let p = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)];
        assert!(PlaneCurve::new(vec![Point::default()], vec![0.0], vec![0.0], false).is_err());
        assert!(PlaneCurve::new(p.clone(), vec![0.0, 0.0], vec![0.0, 1.0], false).is_err());
        assert!(PlaneCurve::new(p.clone(), vec![0.0, 1.0], vec![1.0, 1.0], false).is_err());
        assert!(PlaneCurve::new(p, vec![0.0, 1.0], vec![0.0], false).is_err());
    }

    #[test]
    fn normalize_circle_anywhere() {
        let curve = render(&LogRadiusProfile::uniform_scale(1.0).unwrap(), 1024).unwrap();
        let moved = curve.transformed(Point::default(), 0.3, 1.0, Point::new(5.0, -2.0));
        let n = normalize(&moved).unwrap();
        for p in n.points() {
            assert!((p.distance(Point::default()) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn normalize_is_scale_invariant() {
        let curve = render(&elem(3, 1, 0.3), 512).unwrap();
        let big = curve.transformed(Point::default(), 0.0, 7.0, Point::default());
        let a = normalize(&curve).unwrap();
        let b = normalize(&big).unwrap();
        for (p, q) in a.points().iter().zip(b.points()) {
            assert!(p.distance(*q) < 1e-12);
        }
    }

    #[test]
    fn normalized_oval_has_unit_reach() {
        let n = normalize(&render(&elem(2, 1, 0.4), 1024).unwrap()).unwrap();
        let reach = n
            .points()
            .iter()
            .map(|p| p.distance(Point::default()))
            .fold(0.0, f64::max);
        assert!((reach - 1.0).abs() < 1e-15);
    }

    #[test]
    fn nearest_distance_matches_brute_force() {
        let curve = render(&elem(5, 2, 0.3), 256).unwrap();
        let index = SegmentIndex::new(curve.points());
        for i in 0..200 {
            let t = i as f64 * 0.37;
            let q = Point::new(3.0 * t.cos() + 0.5, 2.5 * (1.3 * t).sin() - 0.2);
            let brute = curve
                .points()
                .windows(2)
                .map(|w| point_segment_distance(q, w[0], w[1]))
                .fold(f64::INFINITY, f64::min);
            assert!((index.nearest_distance(q) - brute).abs() < 1e-14);
        }
        let far = Point::new(100.0, -40.0);
        let brute = curve
            .points()
            .windows(2)
            .map(|w| point_segment_distance(far, w[0], w[1]))
            .fold(f64::INFINITY, f64::min);
        assert!((index.nearest_distance(far) - brute).abs() < 1e-12);
    }

    #[test]
    fn arc_lengths_increase_for_spirals() {
        let spiral =
            LogRadiusProfile::spiral(-0.15, Interval::from_zero(4.0 * PI).unwrap()).unwrap();
        let curve = render(&spiral, 256).unwrap();
        assert!(curve.arc_lengths().windows(2).all(|w| w[1] > w[0]));
    }
}
