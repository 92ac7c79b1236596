//! Inner product and norm of log-radius profiles.

use std::f64::consts::TAU;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::profile::{Interval, LogRadiusProfile};
use crate::quadrature::Quadrature;

/// `2π·lcm` of both profiles' period multiples, when both are periodic.
pub fn common_period(p1: &LogRadiusProfile, p2: &LogRadiusProfile) -> Option<f64> {
    let n1 = p1.period_turns()?;
    let n2 = p2.period_turns()?;
    Some(TAU * n1.lcm(&n2) as f64)
}

fn check_interval(profile: &LogRadiusProfile, interval: &Interval) -> Result<()> {
    if profile.period().is_some() || profile.domain().contains_interval(interval) {
        Ok(())
    } else {
        Err(Error::InvalidInterval(format!(
            "[{}, {}] is not inside the domain [{}, {}] of an aperiodic profile",
            interval.start(),
            interval.end(),
            profile.domain().start(),
            profile.domain().end()
        )))
    }
}

/// `∫ l₁(θ) l₂(θ) dθ` over `interval`, by composite Simpson quadrature.
///
/// Without an explicit interval both profiles must be periodic and the
/// integral runs over `[0, common period]`. Periodic profiles are extended
/// beyond their stored domain; aperiodic ones must contain the interval.
pub fn inner_product_with(
    p1: &LogRadiusProfile,
    p2: &LogRadiusProfile,
    interval: Option<Interval>,
    quadrature: &Quadrature,
) -> Result<f64> {
    let interval = match interval {
        Some(i) => i,
        None => {
            let period = common_period(p1, p2).ok_or_else(|| {
                Error::InvalidInterval(
                    "profiles have no common period; pass an explicit interval".into(),
                )
            })?;
            Interval::from_zero(period)?
        }
    };
    check_interval(p1, &interval)?;
    check_interval(p2, &interval)?;
    Ok(quadrature.integrate(
        |t| p1.evaluate_unchecked(t) * p2.evaluate_unchecked(t),
        interval.start(),
        interval.end(),
    ))
}

/// [`inner_product_with`] using 4096 Simpson panels per 2π.
pub fn inner_product(
    p1: &LogRadiusProfile,
    p2: &LogRadiusProfile,
    interval: Option<Interval>,
) -> Result<f64> {
    inner_product_with(p1, p2, interval, &Quadrature::default())
}

pub fn norm(profile: &LogRadiusProfile, interval: Option<Interval>) -> Result<f64> {
    Ok(inner_product(profile, profile, interval)?.max(0.0).sqrt())
}
