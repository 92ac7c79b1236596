//! Galleries of elementary shapes, shape mixing and angle-profile failures.
//!
//! Every gallery is a pure function of its parameters, so regenerating the
//! figures twice yields byte-identical files.

use std::f64::consts::TAU;
use std::fs;
use std::path::{Path, PathBuf};

use logradius::angle::{render_from_angle, AngleProfile};
use logradius::svg::{write_svg, GridLayout, Style};
use logradius::{normalize, render, Frequency, Interval, LogRadiusProfile, PlaneCurve};

use crate::CliError;

/// Frequencies of the elementary-shape gallery, in display order.
pub const GALLERY_FREQUENCIES: [(u32, u32); 9] = [
    (2, 1),
    (3, 2),
    (3, 1),
    (5, 2),
    (4, 1),
    (5, 1),
    (6, 1),
    (7, 1),
    (8, 1),
];
pub const GALLERY_AMPLITUDE: f64 = 0.3;

/// Amplitudes used by the single-component angle-profile row.
pub const ANGLE_DEMO_AMPLITUDES: [f64; 5] = [0.1, 0.2, 0.4, 0.8, 1.2];

fn normalized(profile: &LogRadiusProfile, samples: usize) -> Result<PlaneCurve, CliError> {
    Ok(normalize(&render(profile, samples)?)?)
}

fn elementary(m: u32, n: u32, eps: f64) -> Result<LogRadiusProfile, CliError> {
    Ok(LogRadiusProfile::elementary(
        Frequency::rational(m, n)?,
        eps,
        0.0,
    )?)
}

fn label_nu(m: u32, n: u32) -> String {
    if n == 1 {
        format!("ν = {m}")
    } else {
        format!("ν = {m}/{n}")
    }
}

/// 3×3 gallery of elementary shapes over one period each.
pub fn elementary_gallery(samples: usize) -> Result<String, CliError> {
    let mut items = Vec::new();
    for &(m, n) in &GALLERY_FREQUENCIES {
        let p = elementary(m, n, GALLERY_AMPLITUDE)?;
        items.push((normalized(&p, samples)?, Style::labeled(label_nu(m, n))));
    }
    let layout =
        GridLayout::with_columns(3).titled(format!("Elementary shapes, ε = {GALLERY_AMPLITUDE}"));
    Ok(write_svg(&items, &layout))
}

/// Scalar multiples `a·p` of an ellipse and a triangle-like shape.
pub fn scalar_multiplication_panel(samples: usize) -> Result<String, CliError> {
    let factors = [0.0, 0.5, 1.0, 1.5, 2.0];
    let bases = [elementary(2, 1, 0.3)?, elementary(3, 1, 0.2)?];
    let mut items = Vec::new();
    for base in &bases {
        for &a in &factors {
            let scaled = base.scalar_multiply(a);
            items.push((
                normalized(&scaled, samples)?,
                Style::labeled(format!("a = {a}")),
            ));
        }
    }
    let layout =
        GridLayout::with_columns(factors.len()).titled("Scalar multiplication (size normalized)");
    Ok(write_svg(&items, &layout))
}

/// Spiral + ellipse and ellipse + square, each with both operands.
pub fn addition_panel(samples: usize) -> Result<String, CliError> {
    let window = Interval::from_zero(2.0 * TAU)?;
    let spiral = LogRadiusProfile::spiral(-0.15, window)?;
    let ellipse_long = elementary(2, 1, 0.4)?.with_domain(window);
    let ellipse = elementary(2, 1, 0.3)?;
    let square = elementary(4, 1, 0.3)?;
    let rows = [
        (
            spiral.clone(),
            ellipse_long.clone(),
            "spiral",
            "ellipse",
            "elliptic spiral",
        ),
        (ellipse.clone(), square.clone(), "ellipse", "ν = 4", "sum"),
    ];
    let mut items = Vec::new();
    for (a, b, la, lb, lsum) in rows {
        let sum = a.add(&b)?;
        items.push((normalized(&a, samples)?, Style::labeled(la)));
        items.push((normalized(&b, samples)?, Style::labeled(lb)));
        items.push((normalized(&sum, samples)?, Style::labeled(lsum)));
    }
    let layout = GridLayout::with_columns(3).titled("Addition of log-radius profiles");
    Ok(write_svg(&items, &layout))
}

fn angle_curve(profile: &AngleProfile, samples: usize) -> Result<PlaneCurve, CliError> {
    Ok(normalize(&render_from_angle(profile, samples)?)?)
}

fn angle_item(
    profile: &AngleProfile,
    label: String,
    samples: usize,
) -> Result<(PlaneCurve, Style), CliError> {
    let mut style = Style::labeled(label);
    if profile.convexity_margin(samples.max(64))? <= 0.0 {
        style.stroke = "#b22222".into();
    }
    Ok((angle_curve(profile, samples)?, style))
}

/// Single-component angle profiles `θ(s) = 2πs + a·cos(2πks)` across
/// `amplitudes`, followed by the angle-domain sum of `mix` components.
/// Non-convex profiles are drawn in red.
pub fn angle_panel(
    k: u32,
    amplitudes: &[f64],
    mix: &[(u32, f64)],
    samples: usize,
) -> Result<String, CliError> {
    let mut items = Vec::new();
    for &a in amplitudes {
        let p = AngleProfile::single_component(k, a, TAU)?;
        items.push(angle_item(&p, format!("k = {k}, a = {a}"), samples)?);
    }
    if !mix.is_empty() {
        let mut sum = AngleProfile::circle(TAU)?;
        for &(k, a) in mix {
            let p = AngleProfile::single_component(k, a, TAU)?;
            items.push(angle_item(&p, format!("k = {k}, a = {a}"), samples)?);
            sum = sum.add(&p)?;
        }
        items.push(angle_item(&sum, "angle-domain sum".into(), samples)?);
    }
    let columns = amplitudes.len().max(mix.len() + 1).max(1);
    let layout = GridLayout::with_columns(columns).titled("Angle profiles (red: not convex)");
    Ok(write_svg(&items, &layout))
}

pub const DEFAULT_ANGLE_MIX: [(u32, f64); 2] = [(2, 0.4), (5, 0.4)];

/// File names written by [`regenerate`], in order.
pub const FIGURE_FILES: [&str; 4] = [
    "elementary_shapes.svg",
    "scalar_multiplication.svg",
    "addition.svg",
    "angle_profiles.svg",
];

/// Writes every gallery into `dir`, returning the written paths.
pub fn regenerate(dir: &Path, samples: usize) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let contents = [
        elementary_gallery(samples)?,
        scalar_multiplication_panel(samples)?,
        addition_panel(samples)?,
        angle_panel(3, &ANGLE_DEMO_AMPLITUDES, &DEFAULT_ANGLE_MIX, samples)?,
    ];
    let mut written = Vec::new();
    for (name, text) in FIGURE_FILES.iter().zip(contents) {
        let path = dir.join(name);
        fs::write(&path, text).map_err(|e| CliError::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn galleries_are_deterministic() {
        assert_eq!(
            elementary_gallery(64).unwrap(),
            elementary_gallery(64).unwrap()
        );
        assert_eq!(addition_panel(64).unwrap(), addition_panel(64).unwrap());
    }

    #[test]
    fn panel_sizes() {
        assert_eq!(
            scalar_multiplication_panel(64)
                .unwrap()
                .matches("<path")
                .count(),
            10
        );
        assert_eq!(addition_panel(64).unwrap().matches("<path").count(), 6);
        let angle = angle_panel(3, &ANGLE_DEMO_AMPLITUDES, &DEFAULT_ANGLE_MIX, 256).unwrap();
        assert_eq!(angle.matches("<path").count(), 8);
    }

    #[test]
    fn non_convex_angle_profiles_are_red() {
        let svg = angle_panel(2, &[0.1, 0.6], &[], 256).unwrap();
        assert_eq!(svg.matches("#b22222").count(), 1);
    }
}
