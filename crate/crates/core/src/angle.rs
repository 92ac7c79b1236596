//! Angle profiles `θ(s)` over normalized arc length and their Fourier
//! descriptors, plus conversions to and from log-radius profiles.
//!
//! An angle profile is
//!
//! ```text
//! θ(s) = s·Θ + Σₖ aₖ·cos(k·s·Θ) + bₖ·sin(k·s·Θ),   s ∈ [0, 1]
//! ```
//!
//! where Θ is the total turn (2π for a simple closed curve). Adding two
//! such profiles adds their descriptors while keeping a single `s·Θ` trend.
//! The resulting curve need not be convex: the curve is convex exactly when
//! `dθ/ds > 0` everywhere, which [`AngleProfile::convexity_margin`] measures.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::profile::LogRadiusProfile;
use crate::quadrature::cumulative_simpson;
use crate::render::{closure_gap, PlaneCurve, Point, DEFAULT_CLOSURE_TOLERANCE};
use crate::roots::invert_increasing;
use crate::spectrum::AMPLITUDE_FLOOR;

pub const MIN_RENDER_SAMPLES: usize = 16;
pub const MIN_MARGIN_SAMPLES: usize = 64;

/// One Fourier descriptor pair `(aₖ, bₖ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Descriptor {
    pub k: u32,
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AngleProfile {
    total_turn: f64,
    descriptors: Vec<Descriptor>,
}

impl AngleProfile {
    /// Descriptors are sorted by `k`; duplicate or zero `k` is rejected.
    pub fn new(total_turn: f64, mut descriptors: Vec<Descriptor>) -> Result<Self> {
        if !total_turn.is_finite() || total_turn == 0.0 {
            return Err(Error::InvalidParameter(format!(
                "total turn must be finite and non-zero, got {total_turn}"
            )));
        }
        if descriptors
            .iter()
            .any(|d| d.k == 0 || !d.a.is_finite() || !d.b.is_finite())
        {
            return Err(Error::InvalidParameter(
                "descriptors need k ≥ 1 and finite coefficients".into(),
            ));
        }
        descriptors.sort_by_key(|d| d.k);
        if descriptors.windows(2).any(|w| w[0].k == w[1].k) {
            return Err(Error::InvalidParameter("duplicate descriptor index".into()));
        }
        Ok(AngleProfile {
            total_turn,
            descriptors,
        })
    }

    /// `θ(s) = s·Θ`: a circle traversed once per `Θ / 2π` turns.
    pub fn circle(total_turn: f64) -> Result<Self> {
        Self::new(total_turn, Vec::new())
    }

    /// `θ(s) = s·Θ + aₖ·cos(k·s·Θ)`.
    pub fn single_component(k: u32, a_k: f64, total_turn: f64) -> Result<Self> {
        Self::new(total_turn, vec![Descriptor { k, a: a_k, b: 0.0 }])
    }

    pub fn total_turn(&self) -> f64 {
        self.total_turn
    }

    pub fn descriptors(&self) -> &[Descriptor] {
        &self.descriptors
    }

    pub fn evaluate_unchecked(&self, s: f64) -> f64 {
        let base = s * self.total_turn;
        base + self
            .descriptors
            .iter()
            .map(|d| {
                let (sn, cs) = (d.k as f64 * base).sin_cos();
                d.a * cs + d.b * sn
            })
            .sum::<f64>()
    }

    pub fn evaluate(&self, s: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::OutsideDomain {
                theta: s,
                start: 0.0,
                end: 1.0,
            });
        }
        Ok(self.evaluate_unchecked(s))
    }

    /// Turning rate `dθ/ds`.
    pub fn derivative(&self, s: f64) -> f64 {
        let base = s * self.total_turn;
        self.total_turn
            + self
                .descriptors
                .iter()
                .map(|d| {
                    let kt = d.k as f64 * self.total_turn;
                    let (sn, cs) = (d.k as f64 * base).sin_cos();
                    kt * (d.b * cs - d.a * sn)
                })
                .sum::<f64>()
    }

    /// Sum of descriptors at equal `k`, keeping one `s·Θ` term.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.total_turn != other.total_turn {
            return Err(Error::InvalidParameter(format!(
                "total turns differ: {} vs {}",
                self.total_turn, other.total_turn
            )));
        }
        let mut merged: Vec<Descriptor> = Vec::new();
        let mut all: Vec<Descriptor> = self
            .descriptors
            .iter()
            .chain(&other.descriptors)
            .copied()
            .collect();
        all.sort_by_key(|d| d.k);
        for d in all {
            match merged.last_mut() {
                Some(last) if last.k == d.k => {
                    last.a += d.a;
                    last.b += d.b;
                }
                _ => merged.push(d),
            }
        }
        merged.retain(|d| d.a != 0.0 || d.b != 0.0);
        Ok(AngleProfile {
            total_turn: self.total_turn,
            descriptors: merged,
        })
    }

    /// Minimum of `dθ/ds` over `samples + 1` uniform points of `[0, 1]`.
    pub fn convexity_margin(&self, samples: usize) -> Result<f64> {
        if samples < MIN_MARGIN_SAMPLES {
            return Err(Error::InvalidParameter(format!(
                "convexity margin needs at least {MIN_MARGIN_SAMPLES} samples, got {samples}"
            )));
        }
        Ok((0..=samples)
            .map(|j| self.derivative(j as f64 / samples as f64))
            .fold(f64::INFINITY, f64::min))
    }

    fn whole_turns(&self) -> Option<u32> {
        let turns = self.total_turn / TAU;
        let whole = turns.round();
        (whole >= 1.0 && whole <= u32::MAX as f64 && (turns - whole).abs() <= 1e-12 * whole)
            .then_some(whole as u32)
    }
}

/// Integrates the unit-speed curve `Γ'(s) = (cos θ(s), sin θ(s))` over
/// `s ∈ [0, 1]` with `samples` cells. The curve parameter is `s`.
pub fn render_from_angle(profile: &AngleProfile, samples: usize) -> Result<PlaneCurve> {
    if samples < MIN_RENDER_SAMPLES {
        return Err(Error::InvalidParameter(format!(
            "need at least {MIN_RENDER_SAMPLES} samples, got {samples}"
        )));
    }
    let (params, acc) = cumulative_simpson(
        |s| {
            let (sn, cs) = profile.evaluate_unchecked(s).sin_cos();
            [cs, sn]
        },
        0.0,
        1.0,
        samples,
    );
    let points = acc.iter().map(|v| Point::new(v[0], v[1])).collect();
    let arc_lengths = params.clone();
    let curve = PlaneCurve::new(points, params, arc_lengths, false)?;
    let closed = closure_gap(&curve)
        .map(|g| g <= DEFAULT_CLOSURE_TOLERANCE)
        .unwrap_or(false);
    Ok(curve.with_closed(closed))
}

/// Log-radius values `l(θⱼ)` at `θⱼ = j·Θ/N`, `j = 0..N`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledLogRadius {
    pub values: Vec<f64>,
    pub period: f64,
}

impl SampledLogRadius {
    pub fn thetas(&self) -> Vec<f64> {
        let n = self.values.len();
        (0..n).map(|j| self.period * j as f64 / n as f64).collect()
    }

    /// The same shape scaled to total arc length `length` (adds `log length`).
    pub fn with_length(&self, length: f64) -> SampledLogRadius {
        let shift = length.ln();
        SampledLogRadius {
            values: self.values.iter().map(|v| v + shift).collect(),
            period: self.period,
        }
    }
}

/// `l(θ) = −log(dθ/ds)` on a uniform θ grid, for the curve of unit total
/// length described by a convex angle profile whose total turn is a whole
/// number of turns.
pub fn angle_to_logradius(profile: &AngleProfile, samples: usize) -> Result<SampledLogRadius> {
    if samples < 2 {
        return Err(Error::InvalidParameter("need at least two samples".into()));
    }
    profile.whole_turns().ok_or(Error::NotClosing)?;
    let margin = profile.convexity_margin((4 * samples).max(MIN_MARGIN_SAMPLES))?;
    if !(margin > 0.0) {
        return Err(Error::NotConvex { margin });
    }
    let theta_total = profile.total_turn;
    let reach: f64 = profile
        .descriptors
        .iter()
        .map(|d| d.a.abs() + d.b.abs())
        .sum();
    let pad = (reach / theta_total).abs() + 1e-9;
    let values = (0..samples)
        .map(|j| {
            let theta = theta_total * j as f64 / samples as f64;
            let guess = theta / theta_total;
            let s = invert_increasing(
                |s| profile.evaluate_unchecked(s),
                |s| profile.derivative(s),
                theta,
                guess - pad,
                guess + pad,
                1e-15,
            )?;
            Ok(-profile.derivative(s).ln())
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(SampledLogRadius {
        values,
        period: theta_total,
    })
}

/// An angle profile together with the total arc length it was normalized by.
#[derive(Debug, Clone, PartialEq)]
pub struct AngleConversion {
    pub profile: AngleProfile,
    pub length: f64,
}

/// Converts a closing log-radius profile to its angle profile.
///
/// The curve is traced over one period Θ from θ = 0 with `samples_per_tau`
/// cells per 2π, arc length is normalized to `[0, 1]` and `θ(s)` is sampled
/// on a uniform `s` grid by monotone inversion. The residual `θ(s) − sΘ` is
/// projected onto `cos(k·s·Θ)`, `sin(k·s·Θ)` for `k ≤ max_k`. Its mean,
/// which the series cannot carry, is absorbed by moving the arc-length
/// origin; the curve keeps its orientation. For `Θ = 2πn` with `n > 1` the
/// basis only spans residuals of period `1/n`, so the projection is lossy.
pub fn logradius_to_angle(
    profile: &LogRadiusProfile,
    samples_per_tau: usize,
    max_k: usize,
) -> Result<AngleConversion> {
    let turns = profile.period_turns().ok_or(Error::Aperiodic)?;
    if !profile.closes() {
        return Err(Error::NotClosing);
    }
    if max_k == 0 || samples_per_tau < MIN_RENDER_SAMPLES {
        return Err(Error::InvalidParameter(format!(
            "need max_k ≥ 1 and at least {MIN_RENDER_SAMPLES} samples per turn"
        )));
    }
    let turns = turns as usize;
    let n = samples_per_tau * turns;
    if 2 * turns * max_k >= n {
        return Err(Error::InvalidParameter(format!(
            "{n} samples cannot resolve {max_k} descriptors over {turns} turns"
        )));
    }
    let period = TAU * turns as f64;
    let h = period / n as f64;
    let radius = |t: f64| profile.evaluate_unchecked(t).exp();
    let (thetas, acc) = cumulative_simpson(|t| [radius(t)], 0.0, period, n);
    let cumulative: Vec<f64> = acc.iter().map(|v| v[0]).collect();
    let length = cumulative[n];
    if !(length.is_finite() && length > 0.0) {
        return Err(Error::NumericRange(format!("total arc length {length}")));
    }

    // Arc length from θ = 0, anywhere in [0, Θ].
    let arc = |t: f64| {
        let i = ((t / h).floor() as usize).min(n - 1);
        let t0 = thetas[i];
        cumulative[i] + (t - t0) / 6.0 * (radius(t0) + 4.0 * radius(0.5 * (t0 + t)) + radius(t))
    };

    let mut residual = Vec::with_capacity(n);
    for j in 0..n {
        let target = length * j as f64 / n as f64;
        let i = cumulative.partition_point(|&c| c <= target).clamp(1, n) - 1;
        let theta = invert_increasing(
            arc,
            radius,
            target,
            thetas[i],
            thetas[i + 1],
            1e-15 * period,
        )?;
        residual.push(theta - period * j as f64 / n as f64);
    }
    let mean = residual.iter().sum::<f64>() / n as f64;
    let shift = -mean / period;

    let mut descriptors = Vec::new();
    for k in 1..=max_k {
        let (mut a, mut b) = (0.0, 0.0);
        for (j, r) in residual.iter().enumerate() {
            let angle = TAU * ((turns * k * j) % n) as f64 / n as f64;
            let (sn, cs) = angle.sin_cos();
            a += (r - mean) * cs;
            b += (r - mean) * sn;
        }
        a *= 2.0 / n as f64;
        b *= 2.0 / n as f64;
        let (sn, cs) = (k as f64 * period * shift).sin_cos();
        let (a, b) = (a * cs + b * sn, b * cs - a * sn);
        if a.hypot(b) > AMPLITUDE_FLOOR {
            descriptors.push(Descriptor { k: k as u32, a, b });
        }
    }
    Ok(AngleConversion {
        profile: AngleProfile::new(period, descriptors)?,
        length,
    })
}
