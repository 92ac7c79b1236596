//! Shape spectra: decomposition of periodic log-radius profiles into a mean
//! plus elementary components, and the inverse synthesis.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::profile::{ElementaryComponent, Frequency, Interval, LogRadiusProfile};

/// Bins with amplitude at or below this are dropped.
pub const AMPLITUDE_FLOOR: f64 = 1e-12;

/// Bin `k` of a spectrum with base period Θ: the component
/// `amplitude·sin(ν(θ − phase))` with `ν = 2πk/Θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralBin {
    pub k: u32,
    pub amplitude: f64,
    pub phase: f64,
}

impl SpectralBin {
    /// `(s, c)` with `ε·sin(ν(θ − θ₀)) = s·sin(νθ) + c·cos(νθ)`.
    pub fn sin_cos_coefficients(&self, period: f64) -> (f64, f64) {
        let nu = TAU * self.k as f64 / period;
        let (s, c) = (nu * self.phase).sin_cos();
        (self.amplitude * c, -self.amplitude * s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShapeSpectrum {
    period: f64,
    mean: f64,
    bins: Vec<SpectralBin>,
}

/// Result of [`ShapeSpectrum::truncate`].
#[derive(Debug, Clone, PartialEq)]
pub struct Truncation {
    pub spectrum: ShapeSpectrum,
    /// L2 norm over one period of the discarded components.
    pub discarded_norm: f64,
}

fn canonical_bin(k: u32, amplitude: f64, phase: f64, period: f64) -> SpectralBin {
    let wavelength = period / k as f64;
    let (amplitude, phase) = if amplitude < 0.0 {
        (-amplitude, phase + 0.5 * wavelength)
    } else {
        (amplitude, phase)
    };
    let mut phase = phase.rem_euclid(wavelength);
    if phase >= wavelength {
        phase = 0.0;
    }
    SpectralBin {
        k,
        amplitude,
        phase,
    }
}

impl ShapeSpectrum {
    /// Builds a spectrum, sorting bins by `k`. Negative amplitudes are folded
    /// into a half-wavelength phase shift and phases reduced into
    /// `[0, Θ/k)`.
    pub fn new(period: f64, mean: f64, bins: Vec<SpectralBin>) -> Result<Self> {
        if !(period.is_finite() && period > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "period must be positive, got {period}"
            )));
        }
        if !mean.is_finite() {
            return Err(Error::InvalidParameter("mean must be finite".into()));
        }
        let mut out = Vec::with_capacity(bins.len());
        for b in bins {
            if b.k == 0 || !b.amplitude.is_finite() || !b.phase.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "invalid spectral bin {b:?}"
                )));
            }
            if b.amplitude != 0.0 {
                out.push(canonical_bin(b.k, b.amplitude, b.phase, period));
            }
        }
        out.sort_by_key(|b| b.k);
        if out.windows(2).any(|w| w[0].k == w[1].k) {
            return Err(Error::InvalidParameter(
                "duplicate spectral bin index".into(),
            ));
        }
        Ok(ShapeSpectrum {
            period,
            mean,
            bins: out,
        })
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn bins(&self) -> &[SpectralBin] {
        &self.bins
    }

    pub fn bin(&self, k: u32) -> Option<&SpectralBin> {
        self.bins.iter().find(|b| b.k == k)
    }

    /// Frequency `2πk/Θ` of bin `k`.
    pub fn frequency_of(&self, k: u32) -> f64 {
        TAU * k as f64 / self.period
    }

    /// Mean square of the centered profile, `½·Σ εₖ²`.
    pub fn power(&self) -> f64 {
        0.5 * self
            .bins
            .iter()
            .map(|b| b.amplitude * b.amplitude)
            .sum::<f64>()
    }

    /// `∫₀^Θ (l − c₀)² dθ = (Θ/2)·Σ εₖ²`.
    pub fn centered_norm_squared(&self) -> f64 {
        self.period * self.power()
    }

    /// Keeps the `top_j` largest-amplitude bins (ties broken by lower `k`).
    pub fn truncate(&self, top_j: usize) -> Result<Truncation> {
        if top_j == 0 {
            return Err(Error::InvalidParameter("top_j must be at least 1".into()));
        }
        let mut order: Vec<usize> = (0..self.bins.len()).collect();
        order.sort_by(|&a, &b| {
            self.bins[b]
                .amplitude
                .total_cmp(&self.bins[a].amplitude)
                .then(self.bins[a].k.cmp(&self.bins[b].k))
        });
        let mut keep = vec![false; self.bins.len()];
        for &i in order.iter().take(top_j) {
            keep[i] = true;
        }
        let mut kept = Vec::new();
        let mut dropped = 0.0;
        for (b, keep) in self.bins.iter().zip(keep) {
            if keep {
                kept.push(*b);
            } else {
                dropped += b.amplitude * b.amplitude;
            }
        }
        Ok(Truncation {
            spectrum: ShapeSpectrum {
                period: self.period,
                mean: self.mean,
                bins: kept,
            },
            discarded_norm: (0.5 * self.period * dropped).sqrt(),
        })
    }
}

/// Discrete Fourier analysis of `values`, taken uniformly over one period
/// `[0, Θ)`, into the mean and bins `k = 1..=max_k`.
pub fn decompose(values: &[f64], period: f64, max_k: usize) -> Result<ShapeSpectrum> {
    decompose_from(values, 0.0, period, max_k)
}

/// Like [`decompose`], for samples at `start + j·Θ/N`.
pub fn decompose_from(
    values: &[f64],
    start: f64,
    period: f64,
    max_k: usize,
) -> Result<ShapeSpectrum> {
    if max_k == 0 {
        return Err(Error::InvalidParameter("max_k must be at least 1".into()));
    }
    let n = values.len();
    if n < 2 * max_k + 1 {
        return Err(Error::InvalidSamples(format!(
            "{n} samples cannot resolve {max_k} bins (need at least {})",
            2 * max_k + 1
        )));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidSamples("non-finite sample".into()));
    }
    if !(period.is_finite() && period > 0.0) || !start.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "invalid period {period} or start {start}"
        )));
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    let mut bins = Vec::new();
    for k in 1..=max_k {
        let (mut a, mut b) = (0.0, 0.0);
        for (j, v) in values.iter().enumerate() {
            let angle = TAU * ((k * j) % n) as f64 / n as f64;
            let (s, c) = angle.sin_cos();
            a += v * c;
            b += v * s;
        }
        a *= 2.0 / n as f64;
        b *= 2.0 / n as f64;
        let amplitude = a.hypot(b);
        if amplitude <= AMPLITUDE_FLOOR {
            continue;
        }
        let nu = TAU * k as f64 / period;
        let phase = start + (-a).atan2(b) / nu;
        bins.push(canonical_bin(k as u32, amplitude, phase, period));
    }
    Ok(ShapeSpectrum { period, mean, bins })
}

/// Decomposes `(θ, l)` samples, checking that the θ grid is uniform. The
/// period is the number of samples times the spacing.
pub fn decompose_grid(thetas: &[f64], values: &[f64], max_k: usize) -> Result<ShapeSpectrum> {
    if thetas.len() != values.len() {
        return Err(Error::InvalidSamples(
            "theta and value columns differ in length".into(),
        ));
    }
    if thetas.len() < 2 {
        return Err(Error::InvalidSamples("need at least two samples".into()));
    }
    let n = thetas.len();
    let h = (thetas[n - 1] - thetas[0]) / (n - 1) as f64;
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidSamples("theta must increase".into()));
    }
    for (j, t) in thetas.iter().enumerate() {
        let expect = thetas[0] + h * j as f64;
        if (t - expect).abs() > 1e-9 * h.max(expect.abs()) {
            return Err(Error::InvalidSamples(format!(
                "non-uniform theta grid at row {j}: {t} (expected {expect})"
            )));
        }
    }
    decompose_from(values, thetas[0], h * n as f64, max_k)
}

/// Rational form `k/n` of `2πk/Θ` when `Θ` is a whole number of turns.
fn bin_frequency(k: u32, period: f64) -> Result<Frequency> {
    let turns = period / TAU;
    let whole = turns.round();
    if whole >= 1.0 && whole <= u32::MAX as f64 && (turns - whole).abs() <= 1e-12 * whole {
        Frequency::rational(k, whole as u32)
    } else {
        Frequency::real(TAU * k as f64 / period)
    }
}

/// Profile with the spectrum's mean and one component per bin, on `[0, Θ]`.
pub fn reconstruct(spectrum: &ShapeSpectrum) -> LogRadiusProfile {
    let components = spectrum
        .bins
        .iter()
        .map(|b| {
            let f = bin_frequency(b.k, spectrum.period).expect("bin index and period are positive");
            ElementaryComponent::new(f, b.amplitude, b.phase).expect("bins are finite")
        })
        .collect();
    let domain = Interval::from_zero(spectrum.period).expect("period is positive");
    LogRadiusProfile::new(spectrum.mean, 0.0, components, domain).expect("mean is finite")
}

/// Samples a periodic profile at `samples` uniform points of `[0, Θ)`.
pub fn sample_periodic(profile: &LogRadiusProfile, samples: usize) -> Result<(Vec<f64>, f64)> {
    let period = profile.period().ok_or(Error::Aperiodic)?;
    if samples < 2 {
        return Err(Error::InvalidParameter("need at least two samples".into()));
    }
    let h = period / samples as f64;
    let values = (0..samples)
        .map(|j| profile.evaluate_unchecked(h * j as f64))
        .collect();
    Ok((values, period))
}

/// Mean square of the centered samples minus the spectrum's power; zero when
/// the bins capture all the content.
pub fn parseval_residual(values: &[f64], spectrum: &ShapeSpectrum) -> f64 {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let msq = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
    msq - spectrum.power()
}
