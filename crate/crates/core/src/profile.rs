//! Log-radius profiles and their vector-space algebra.
//!
//! A convex curve parameterized by its tangent angle θ is described by the
//! log of its radius of curvature, `l(θ) = log r(θ)`. Profiles are stored
//! symbolically as
//!
//! ```text
//! l(θ) = c₀ + a·θ + Σᵢ εᵢ·sin(νᵢ(θ − θ₀ᵢ))
//! ```
//!
//! over a closed θ-interval. Scalar multiplication and addition act term by
//! term, so the vector-space axioms hold on the stored coefficients rather
//! than on samples.

use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Frequency ν of an elementary component.
///
/// Rational frequencies `m/n` are kept in lowest terms so that closure and
/// symmetry can be decided exactly. Any other positive value is stored as a
/// real and treated as non-rational.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Frequency {
    Rational { num: u32, den: u32 },
    Real(f64),
}

impl Frequency {
    pub fn rational(num: u32, den: u32) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter(
                "frequency denominator is zero".into(),
            ));
        }
        if num == 0 {
            return Err(Error::InvalidParameter(
                "frequency must be positive; use a spiral slope for the zero-frequency limit"
                    .into(),
            ));
        }
        let g = num.gcd(&den);
        Ok(Frequency::Rational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn real(value: f64) -> Result<Self> {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "frequency must be finite and positive, got {value}"
            )));
        }
        Ok(Frequency::Real(value))
    }

    pub fn integer(m: u32) -> Result<Self> {
        Self::rational(m, 1)
    }

    pub fn value(&self) -> f64 {
        match *self {
            Frequency::Rational { num, den } => num as f64 / den as f64,
            Frequency::Real(v) => v,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Frequency::Rational { .. })
    }

    pub fn as_ratio(&self) -> Option<(u32, u32)> {
        match *self {
            Frequency::Rational { num, den } => Some((num, den)),
            Frequency::Real(_) => None,
        }
    }

    /// Period 2π/ν of the sinusoid.
    pub fn wavelength(&self) -> f64 {
        match *self {
            Frequency::Rational { num, den } => TAU * den as f64 / num as f64,
            Frequency::Real(v) => TAU / v,
        }
    }
}

impl fmt::Display for Frequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Frequency::Rational { num, den: 1 } => write!(f, "{num}"),
            Frequency::Rational { num, den } => write!(f, "{num}/{den}"),
            Frequency::Real(v) => write!(f, "{v}"),
        }
    }
}

/// Parses `m/n` or a bare integer as a rational frequency and anything else
/// as a real one.
impl FromStr for Frequency {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid frequency {s:?}"));
        if let Some((m, n)) = s.split_once('/') {
            let m: u32 = m.trim().parse().map_err(|_| bad())?;
            let n: u32 = n.trim().parse().map_err(|_| bad())?;
            return Frequency::rational(m, n);
        }
        if let Ok(m) = s.parse::<u32>() {
            return Frequency::integer(m);
        }
        let v: f64 = s.parse().map_err(|_| bad())?;
        Frequency::real(v)
    }
}

/// One sinusoid `ε·sin(ν(θ − θ₀))` of a log-radius profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElementaryComponent {
    frequency: Frequency,
    amplitude: f64,
    phase: f64,
}

fn reduce_phase(phase: f64, wavelength: f64) -> f64 {
    let r = phase.rem_euclid(wavelength);
    if r >= wavelength {
        0.0
    } else {
        r
    }
}

impl ElementaryComponent {
    /// The phase is reduced into `[0, 2π/ν)`; evaluation is unaffected.
    pub fn new(frequency: Frequency, amplitude: f64, phase: f64) -> Result<Self> {
        if !amplitude.is_finite() || !phase.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "amplitude and phase must be finite (got {amplitude}, {phase})"
            )));
        }
        if let Frequency::Real(v) = frequency {
            Frequency::real(v)?;
        }
        Ok(ElementaryComponent {
            frequency,
            amplitude,
            phase: reduce_phase(phase, frequency.wavelength()),
        })
    }

    pub fn frequency(&self) -> Frequency {
        self.frequency
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn evaluate(&self, theta: f64) -> f64 {
        self.amplitude * (self.frequency.value() * (theta - self.phase)).sin()
    }

    /// Coefficients `(s, c)` with `ε·sin(ν(θ − θ₀)) = s·sin(νθ) + c·cos(νθ)`.
    ///
    /// Unlike `(ε, θ₀)` these are unique: `(−ε, θ₀ + π/ν)` maps to the same pair.
    pub fn sin_cos_coefficients(&self) -> (f64, f64) {
        let (s, c) = (self.frequency.value() * self.phase).sin_cos();
        (self.amplitude * c, -self.amplitude * s)
    }

    fn scaled(&self, factor: f64) -> Self {
        ElementaryComponent {
            amplitude: self.amplitude * factor,
            ..*self
        }
    }
}

/// Closed θ-interval with `end > start`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    start: f64,
    end: f64,
}

impl Interval {
    pub fn new(start: f64, end: f64) -> Result<Self> {
        if !(start.is_finite() && end.is_finite()) || end <= start {
            return Err(Error::InvalidInterval(format!("[{start}, {end}]")));
        }
        Ok(Interval { start, end })
    }

    /// `[0, length]`.
    pub fn from_zero(length: f64) -> Result<Self> {
        Self::new(0.0, length)
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn end(&self) -> f64 {
        self.end
    }

    pub fn length(&self) -> f64 {
        self.end - self.start
    }

    fn slack(&self) -> f64 {
        1e-12 * self.start.abs().max(self.end.abs()).max(1.0)
    }

    /// Membership test with a relative slack of 1e-12 at both ends.
    pub fn contains(&self, theta: f64) -> bool {
        let slack = self.slack();
        theta >= self.start - slack && theta <= self.end + slack
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.contains(other.start) && self.contains(other.end)
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let start = self.start.max(other.start);
        let end = self.end.min(other.end);
        (end > start).then_some(Interval { start, end })
    }
}

/// Log-radius profile `l(θ) = c₀ + a·θ + Σ εᵢ sin(νᵢ(θ − θ₀ᵢ))` over a domain.
///
/// Components are kept in canonical form: at most one component per
/// frequency, none with zero amplitude, sorted by increasing frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct LogRadiusProfile {
    constant: f64,
    slope: f64,
    components: Vec<ElementaryComponent>,
    domain: Interval,
}

fn default_domain() -> Interval {
    Interval {
        start: 0.0,
        end: TAU,
    }
}

fn component_order(a: &ElementaryComponent, b: &ElementaryComponent) -> Ordering {
    a.frequency
        .value()
        .total_cmp(&b.frequency.value())
        .then(a.phase.total_cmp(&b.phase))
        .then(a.amplitude.total_cmp(&b.amplitude))
}

fn merge_group(group: &[ElementaryComponent]) -> Option<ElementaryComponent> {
    let frequency = group
        .iter()
        .map(|c| c.frequency)
        .find(Frequency::is_rational)
        .unwrap_or(group[0].frequency);
    if group.len() == 1 {
        return Some(ElementaryComponent {
            frequency,
            ..group[0]
        });
    }
    let phase = group[0].phase;
    if group.iter().all(|c| c.phase == phase) {
        let amplitude: f64 = group.iter().map(|c| c.amplitude).sum();
        return (amplitude != 0.0).then_some(ElementaryComponent {
            frequency,
            amplitude,
            phase,
        });
    }
    let (mut s, mut c) = (0.0, 0.0);
    let mut scale = 0.0;
    for comp in group {
        let (cs, cc) = comp.sin_cos_coefficients();
        s += cs;
        c += cc;
        scale += comp.amplitude.abs();
    }
    let amplitude = s.hypot(c);
    if amplitude <= 4.0 * f64::EPSILON * scale {
        return None;
    }
    let nu = frequency.value();
    Some(ElementaryComponent {
        frequency,
        amplitude,
        phase: reduce_phase((-c).atan2(s) / nu, frequency.wavelength()),
    })
}

fn canonicalize(mut components: Vec<ElementaryComponent>) -> Vec<ElementaryComponent> {
    components.retain(|c| c.amplitude != 0.0);
    components.sort_by(component_order);
    let mut out = Vec::with_capacity(components.len());
    let mut rest = components.as_slice();
    while let Some(first) = rest.first() {
        let nu = first.frequency.value();
        let len = rest
            .iter()
            .take_while(|c| c.frequency.value() == nu)
            .count();
        out.extend(merge_group(&rest[..len]));
        rest = &rest[len..];
    }
    out
}

impl LogRadiusProfile {
    pub fn new(
        constant: f64,
        slope: f64,
        components: Vec<ElementaryComponent>,
        domain: Interval,
    ) -> Result<Self> {
        if !constant.is_finite() || !slope.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "constant and slope must be finite (got {constant}, {slope})"
            )));
        }
        Ok(LogRadiusProfile {
            constant,
            slope,
            components: canonicalize(components),
            domain,
        })
    }

    /// `l ≡ 0` on `[0, 2π]`: the identity of addition.
    pub fn unit_circle() -> Self {
        Self::zero_on(default_domain())
    }

    pub fn zero_on(domain: Interval) -> Self {
        LogRadiusProfile {
            constant: 0.0,
            slope: 0.0,
            components: Vec::new(),
            domain,
        }
    }

    /// Circle of radius `exp(c₀)`.
    pub fn uniform_scale(constant: f64) -> Result<Self> {
        Self::new(constant, 0.0, Vec::new(), default_domain())
    }

    /// Logarithmic spiral `l(θ) = a·θ`.
    pub fn spiral(slope: f64, domain: Interval) -> Result<Self> {
        Self::new(0.0, slope, Vec::new(), domain)
    }

    /// Elementary shape `ε·sin(ν(θ − θ₀))` over one period `[0, 2πn]` for
    /// `ν = m/n`, or over `[0, 2π]` for a real frequency.
    pub fn elementary(frequency: Frequency, amplitude: f64, phase: f64) -> Result<Self> {
        let component = ElementaryComponent::new(frequency, amplitude, phase)?;
        let length = match frequency {
            Frequency::Rational { den, .. } => TAU * den as f64,
            Frequency::Real(_) => TAU,
        };
        Self::new(0.0, 0.0, vec![component], Interval::from_zero(length)?)
    }

    /// `(a/ν)·sin(νθ)` on `[0, 2π]`, which tends to the spiral `a·θ` as ν → 0;
    /// `ν = 0` returns that spiral exactly.
    pub fn spiral_limit(slope: f64, frequency: f64) -> Result<Self> {
        if !(frequency >= 0.0 && frequency.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "spiral-limit frequency must be finite and non-negative, got {frequency}"
            )));
        }
        if frequency == 0.0 {
            return Self::spiral(slope, default_domain());
        }
        let component =
            ElementaryComponent::new(Frequency::real(frequency)?, slope / frequency, 0.0)?;
        Self::new(0.0, 0.0, vec![component], default_domain())
    }

    pub fn with_domain(mut self, domain: Interval) -> Self {
        self.domain = domain;
        self
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    pub fn components(&self) -> &[ElementaryComponent] {
        &self.components
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    /// True when every term is zero (the unit circle), regardless of domain.
    pub fn is_zero(&self) -> bool {
        self.constant == 0.0 && self.slope == 0.0 && self.components.is_empty()
    }

    /// The profile formula at `θ`, without checking the domain.
    pub fn evaluate_unchecked(&self, theta: f64) -> f64 {
        self.constant
            + self.slope * theta
            + self
                .components
                .iter()
                .map(|c| c.evaluate(theta))
                .sum::<f64>()
    }

    pub fn evaluate(&self, theta: f64) -> Result<f64> {
        if !self.domain.contains(theta) {
            return Err(Error::OutsideDomain {
                theta,
                start: self.domain.start,
                end: self.domain.end,
            });
        }
        Ok(self.evaluate_unchecked(theta))
    }

    /// Evaluates the periodic extension of the profile; fails for aperiodic
    /// profiles.
    pub fn evaluate_periodic(&self, theta: f64) -> Result<f64> {
        let period = self.period().ok_or(Error::Aperiodic)?;
        if !theta.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "theta must be finite, got {theta}"
            )));
        }
        let start = self.domain.start;
        Ok(self.evaluate_unchecked(start + (theta - start).rem_euclid(period)))
    }

    /// Radius of curvature `exp(l(θ))`.
    pub fn radius(&self, theta: f64) -> Result<f64> {
        self.evaluate(theta).map(f64::exp)
    }

    pub fn scalar_multiply(&self, factor: f64) -> Self {
        let components = if factor == 0.0 {
            Vec::new()
        } else {
            self.components.iter().map(|c| c.scaled(factor)).collect()
        };
        LogRadiusProfile {
            constant: factor * self.constant,
            slope: factor * self.slope,
            components,
            domain: self.domain,
        }
    }

    /// Pointwise sum of two profiles on the intersection of their domains.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let domain = self
            .domain
            .intersect(&other.domain)
            .ok_or(Error::DisjointDomains)?;
        let components = self
            .components
            .iter()
            .chain(&other.components)
            .copied()
            .collect();
        Ok(LogRadiusProfile {
            constant: self.constant + other.constant,
            slope: self.slope + other.slope,
            components: canonicalize(components),
            domain,
        })
    }

    /// `lcm(n₁, …, n_k)` for rational `νᵢ = mᵢ/nᵢ` when the slope is zero.
    pub fn period_turns(&self) -> Option<u64> {
        if self.slope != 0.0 {
            return None;
        }
        self.components.iter().try_fold(1u64, |acc, c| {
            c.frequency
                .as_ratio()
                .map(|(_, den)| acc.lcm(&(den as u64)))
        })
    }

    /// `Θ = 2π·lcm(nᵢ)`, or `None` for spirals and irrational frequencies.
    pub fn period(&self) -> Option<f64> {
        self.period_turns().map(|n| TAU * n as f64)
    }

    /// `gcd(mᵢ)` of the numerators, or `None` when the profile is aperiodic
    /// or has no components.
    fn numerator_gcd(&self) -> Option<u32> {
        self.period_turns()?;
        self.components
            .iter()
            .filter_map(|c| c.frequency.as_ratio())
            .map(|(num, _)| num)
            .reduce(|a, b| a.gcd(&b))
    }

    /// Whether the rendered curve returns to its starting point after one
    /// period.
    ///
    /// Over one period the curve consists of `g = gcd(mᵢ)` congruent arcs,
    /// each rotated by `2π·lcm(nᵢ)/g` from the previous one; for `g ≥ 2`
    /// they sum to zero. For `g = 1` the period ends in a pure translation
    /// (closure would need the first Fourier coefficient of `exp(l)` to
    /// vanish, which does not happen generically).
    pub fn closes(&self) -> bool {
        if self.period_turns().is_none() {
            return false;
        }
        self.components.is_empty() || self.numerator_gcd().is_some_and(|g| g >= 2)
    }

    /// Order of rotational symmetry of a closing, non-circular profile.
    pub fn symmetry_order(&self) -> Option<u32> {
        self.numerator_gcd().filter(|&g| g >= 2)
    }

    /// Term-wise comparison with absolute tolerance `tol`.
    ///
    /// Frequencies must match exactly; components are compared through their
    /// sin/cos coefficients so that sign-flipped, half-period-shifted
    /// representations of the same sinusoid compare equal.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let close = |a: f64, b: f64| (a - b).abs() <= tol;
        close(self.constant, other.constant)
            && close(self.slope, other.slope)
            && close(self.domain.start, other.domain.start)
            && close(self.domain.end, other.domain.end)
            && self.components.len() == other.components.len()
            && self.components.iter().zip(&other.components).all(|(a, b)| {
                let (sa, ca) = a.sin_cos_coefficients();
                let (sb, cb) = b.sin_cos_coefficients();
                a.frequency == b.frequency && close(sa, sb) && close(ca, cb)
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn elem(m: u32, n: u32, eps: f64, phase: f64) -> LogRadiusProfile {
        LogRadiusProfile::elementary(Frequency::rational(m, n).unwrap(), eps, phase).unwrap()
    }

    #[test]
    fn rational_frequencies_reduce() {
        assert_eq!(
            Frequency::rational(6, 4).unwrap(),
            Frequency::Rational { num: 3, den: 2 }
        );
        assert!(Frequency::rational(1, 0).is_err());
        assert!(Frequency::rational(0, 3).is_err());
        assert!(Frequency::real(-1.0).is_err());
        assert!(Frequency::real(f64::NAN).is_err());
    }

    #[test]
    fn frequency_parsing() {
        assert_eq!(
            "3/2".parse::<Frequency>().unwrap(),
            Frequency::rational(3, 2).unwrap()
        );
        assert_eq!(
            "4".parse::<Frequency>().unwrap(),
            Frequency::rational(4, 1).unwrap()
        );
        assert_eq!("2.5".parse::<Frequency>().unwrap(), Frequency::Real(2.5));
        assert!("3/0".parse::<Frequency>().is_err());
        assert!("x".parse::<Frequency>().is_err());
        assert_eq!(Frequency::rational(5, 2).unwrap().to_string(), "5/2");
    }

    #[test]
    fn phase_is_reduced_into_one_wavelength() {
        let c =
            ElementaryComponent::new(Frequency::integer(2).unwrap(), 0.5, 0.3 + 3.0 * PI).unwrap();
        assert!((c.phase() - 0.3).abs() < 1e-12);
        let c = ElementaryComponent::new(Frequency::integer(2).unwrap(), 0.5, -0.1).unwrap();
        assert!(c.phase() >= 0.0 && c.phase() < PI);
        let c = ElementaryComponent::new(Frequency::integer(1).unwrap(), 1.0, -1e-300).unwrap();
        assert!(c.phase() < TAU);
    }

    #[test]
    fn component_peaks_a_quarter_wavelength_after_phase() {
        for &(m, n, phase) in &[(2, 1, 0.3), (3, 2, 1.7), (7, 3, 5.0)] {
            let f = Frequency::rational(m, n).unwrap();
            let c = ElementaryComponent::new(f, 0.8, phase).unwrap();
            let peak = c.phase() + PI * n as f64 / (2.0 * m as f64);
            assert!((c.evaluate(peak) - 0.8).abs() < 1e-12);
            assert!(c.evaluate(c.phase() + PI * n as f64 / m as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(LogRadiusProfile::unit_circle().evaluate(1.3).unwrap(), 0.0);
        assert!((elem(2, 1, 0.5, 0.0).evaluate(PI / 4.0).unwrap() - 0.5).abs() < 1e-15);
        let spiral = LogRadiusProfile::spiral(0.1, Interval::from_zero(TAU).unwrap()).unwrap();
        assert!((spiral.evaluate(TAU).unwrap() - 0.2 * PI).abs() < 1e-15);
    }

    #[test]
    fn evaluate_outside_domain() {
        let p = elem(2, 1, 0.5, 0.0);
        assert!(matches!(p.evaluate(7.0), Err(Error::OutsideDomain { .. })));
        assert!((p.evaluate_periodic(7.0).unwrap() - p.evaluate_unchecked(7.0)).abs() < 1e-12);
        let spiral = LogRadiusProfile::spiral(0.1, Interval::from_zero(TAU).unwrap()).unwrap();
        assert_eq!(spiral.evaluate_periodic(7.0), Err(Error::Aperiodic));
    }

    #[test]
    fn scalar_multiply_examples() {
        let p = elem(2, 1, 0.3, 0.4)
            .add(&LogRadiusProfile::uniform_scale(0.2).unwrap())
            .unwrap();
        assert_eq!(p.scalar_multiply(1.0), p);
        let zero = p.scalar_multiply(0.0);
        assert!(zero.is_zero());
        let doubled = elem(2, 1, 0.3, 0.0).scalar_multiply(2.0);
        assert_eq!(doubled.components().len(), 1);
        assert!((doubled.components()[0].amplitude() - 0.6).abs() < 1e-15);
        assert_eq!(
            doubled.components()[0].frequency(),
            Frequency::integer(2).unwrap()
        );
    }

    #[test]
    fn add_examples() {
        let p = elem(3, 2, 0.2, 1.0);
        let circle = LogRadiusProfile::zero_on(p.domain());
        assert_eq!(p.add(&circle).unwrap(), p);

        let domain = Interval::from_zero(4.0 * PI).unwrap();
        let spiral = LogRadiusProfile::spiral(-0.15, domain).unwrap();
        let ellipse = elem(2, 1, 0.4, 0.0).with_domain(domain);
        let mix = spiral.add(&ellipse).unwrap();
        assert_eq!(mix.slope(), -0.15);
        assert_eq!(mix.components().len(), 1);
        assert_eq!(mix.components()[0].amplitude(), 0.4);
        assert_eq!(mix.domain(), domain);

        let twice = elem(3, 1, 0.2, 0.0).add(&elem(3, 1, 0.2, 0.0)).unwrap();
        assert_eq!(twice.components().len(), 1);
        assert_eq!(twice.components()[0].amplitude(), 0.4);
        assert_eq!(twice.components()[0].phase(), 0.0);
    }

    #[test]
    fn equal_frequencies_with_different_phases_merge() {
        let a = elem(2, 1, 0.3, 0.1);
        let b = elem(2, 1, 0.5, 1.2);
        let sum = a.add(&b).unwrap();
        assert_eq!(sum.components().len(), 1);
        for i in 0..50 {
            let t = i as f64 * 0.123;
            let expect = a.evaluate_unchecked(t) + b.evaluate_unchecked(t);
            assert!((sum.evaluate_unchecked(t) - expect).abs() < 1e-14);
        }
        assert!(sum.components()[0].amplitude() > 0.0);
    }

    #[test]
    fn opposite_phases_cancel() {
        let a = elem(2, 1, 0.3, 0.0);
        let b = elem(2, 1, 0.3, PI / 2.0);
        assert!(a.add(&b).unwrap().components().is_empty());
        assert!(a.add(&a.scalar_multiply(-1.0)).unwrap().is_zero());
    }

    #[test]
    fn add_rejects_disjoint_domains() {
        let a = LogRadiusProfile::unit_circle().with_domain(Interval::new(0.0, 1.0).unwrap());
        let b = LogRadiusProfile::unit_circle().with_domain(Interval::new(1.0, 2.0).unwrap());
        assert_eq!(a.add(&b), Err(Error::DisjointDomains));
        let c = LogRadiusProfile::unit_circle().with_domain(Interval::new(0.5, 3.0).unwrap());
        assert_eq!(
            a.add(&c).unwrap().domain(),
            Interval::new(0.5, 1.0).unwrap()
        );
    }

    #[test]
    fn components_sorted_by_frequency() {
        let p = elem(5, 1, 0.1, 0.0)
            .add(&elem(3, 2, 0.1, 0.0))
            .unwrap()
            .add(&elem(2, 1, 0.1, 0.0))
            .unwrap();
        let nus: Vec<f64> = p
            .components()
            .iter()
            .map(|c| c.frequency().value())
            .collect();
        assert_eq!(nus, vec![1.5, 2.0, 5.0]);
    }

    #[test]
    fn period_examples() {
        let p = elem(3, 2, 0.2, 0.0);
        assert!((p.period().unwrap() - 4.0 * PI).abs() < 1e-15);
        assert!(p.closes());
        assert_eq!(p.symmetry_order(), Some(3));

        let half = elem(1, 2, 0.2, 0.0);
        assert!((half.period().unwrap() - 4.0 * PI).abs() < 1e-15);
        assert!(!half.closes());

        let spiral = LogRadiusProfile::spiral(0.1, Interval::from_zero(TAU).unwrap()).unwrap();
        assert_eq!(spiral.period(), None);
        assert!(!spiral.closes());

        let circle = LogRadiusProfile::unit_circle();
        assert_eq!(circle.period(), Some(TAU));
        assert!(circle.closes());
        assert_eq!(circle.symmetry_order(), None);

        let irrational =
            LogRadiusProfile::elementary(Frequency::real(2f64.sqrt()).unwrap(), 0.2, 0.0).unwrap();
        assert_eq!(irrational.period(), None);
        assert!(!irrational.closes());
    }

    #[test]
    fn mixed_profile_symmetry_is_numerator_gcd() {
        let p = elem(4, 1, 0.2, 0.0).add(&elem(6, 1, 0.1, 0.3)).unwrap();
        assert_eq!(p.symmetry_order(), Some(2));
        let q = elem(2, 1, 0.2, 0.0).add(&elem(3, 1, 0.1, 0.0)).unwrap();
        assert!(!q.closes());
        let r = elem(3, 2, 0.2, 0.0).add(&elem(9, 4, 0.1, 0.0)).unwrap();
        assert_eq!(r.period_turns(), Some(4));
        assert_eq!(r.symmetry_order(), Some(3));
    }

    #[test]
    fn spiral_limit_examples() {
        let exact = LogRadiusProfile::spiral_limit(1.0, 0.0).unwrap();
        assert_eq!(exact.slope(), 1.0);
        assert!(exact.components().is_empty());

        let near = LogRadiusProfile::spiral_limit(1.0, 1e-3).unwrap();
        assert!((near.evaluate(TAU).unwrap() - TAU).abs() < 1e-4);

        let unit = LogRadiusProfile::spiral_limit(1.0, 1.0).unwrap();
        let c = unit.components()[0];
        assert_eq!(
            (c.frequency().value(), c.amplitude(), c.phase()),
            (1.0, 1.0, 0.0)
        );

        assert!(LogRadiusProfile::spiral_limit(1.0, -1.0).is_err());
    }

    #[test]
    fn radius_is_positive() {
        let p =
            LogRadiusProfile::new(-700.0, 0.0, vec![], Interval::from_zero(1.0).unwrap()).unwrap();
        assert!(p.radius(0.5).unwrap() > 0.0);
    }
}
