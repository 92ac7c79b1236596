//! Text formats: profile and angle-profile documents (TOML), curve and
//! sample tables (CSV).
//!
//! A profile document looks like
//!
//! ```toml
//! format_version = 1
//! constant = 0.0000000000000000e0
//! slope = 0.0000000000000000e0
//! domain = [0.0000000000000000e0, 6.2831853071795862e0]
//!
//! [[component]]
//! nu_num = 2
//! nu_den = 1
//! epsilon = 4.0000000000000002e-1
//! theta0 = 0.0000000000000000e0
//! ```
//!
//! Rational frequencies are written as `nu_num`/`nu_den`, real ones as
//! `nu_real`. Reals carry 17 significant digits so documents round-trip
//! exactly. Unknown keys and newer format versions are rejected.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::angle::{AngleProfile, Descriptor};
use crate::error::{Error, Result};
use crate::profile::{ElementaryComponent, Frequency, Interval, LogRadiusProfile};
use crate::render::PlaneCurve;

pub const FORMAT_VERSION: i64 = 1;

fn real(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileDoc {
    #[allow(dead_code)]
    format_version: i64,
    constant: f64,
    slope: f64,
    domain: [f64; 2],
    #[serde(default)]
    component: Vec<ComponentDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentDoc {
    nu_num: Option<u32>,
    nu_den: Option<u32>,
    nu_real: Option<f64>,
    epsilon: f64,
    theta0: f64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AngleDoc {
    #[allow(dead_code)]
    format_version: i64,
    total_turn: f64,
    #[serde(default)]
    descriptor: Vec<DescriptorDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DescriptorDoc {
    k: u32,
    a: f64,
    b: f64,
}

/// Which kind of document a text holds, judged by its top-level keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    LogRadius,
    Angle,
}

fn parse_versioned(text: &str) -> Result<toml::Table> {
    let table: toml::Table = text
        .parse()
        .map_err(|e: toml::de::Error| Error::Parse(e.to_string()))?;
    match table.get("format_version") {
        Some(toml::Value::Integer(v)) if *v > FORMAT_VERSION => Err(Error::UnsupportedVersion {
            found: *v,
            supported: FORMAT_VERSION,
        }),
        Some(toml::Value::Integer(v)) if *v >= 1 => Ok(table),
        Some(other) => Err(Error::Parse(format!(
            "format_version: invalid value {other}"
        ))),
        None => Err(Error::Parse("missing field `format_version`".into())),
    }
}

pub fn document_kind(text: &str) -> Result<DocumentKind> {
    let table = parse_versioned(text)?;
    if table.contains_key("total_turn") {
        Ok(DocumentKind::Angle)
    } else {
        Ok(DocumentKind::LogRadius)
    }
}

pub fn write_profile(profile: &LogRadiusProfile) -> String {
    let mut out = String::new();
    let domain = profile.domain();
    let _ = writeln!(out, "format_version = {FORMAT_VERSION}");
    let _ = writeln!(out, "constant = {}", real(profile.constant()));
    let _ = writeln!(out, "slope = {}", real(profile.slope()));
    let _ = writeln!(
        out,
        "domain = [{}, {}]",
        real(domain.start()),
        real(domain.end())
    );
    for c in profile.components() {
        out.push_str("\n[[component]]\n");
        match c.frequency() {
            Frequency::Rational { num, den } => {
                let _ = writeln!(out, "nu_num = {num}\nnu_den = {den}");
            }
            Frequency::Real(v) => {
                let _ = writeln!(out, "nu_real = {}", real(v));
            }
        }
        let _ = writeln!(out, "epsilon = {}", real(c.amplitude()));
        let _ = writeln!(out, "theta0 = {}", real(c.phase()));
    }
    out
}

pub fn read_profile(text: &str) -> Result<LogRadiusProfile> {
    let table = parse_versioned(text)?;
    let doc: ProfileDoc = table
        .try_into()
        .map_err(|e: toml::de::Error| Error::Parse(e.to_string()))?;
    let domain = Interval::new(doc.domain[0], doc.domain[1])
        .map_err(|e| Error::Parse(format!("domain: {e}")))?;
    let components = doc
        .component
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let context = |e: Error| Error::Parse(format!("component #{}: {e}", i + 1));
            let frequency = match (c.nu_num, c.nu_den, c.nu_real) {
                (Some(m), Some(n), None) => Frequency::rational(m, n),
                (None, None, Some(v)) => Frequency::real(v),
                _ => Err(Error::InvalidParameter(
                    "give either nu_num and nu_den, or nu_real".into(),
                )),
            }
            .map_err(context)?;
            ElementaryComponent::new(frequency, c.epsilon, c.theta0).map_err(context)
        })
        .collect::<Result<Vec<_>>>()?;
    LogRadiusProfile::new(doc.constant, doc.slope, components, domain)
}

pub fn write_angle_profile(profile: &AngleProfile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "format_version = {FORMAT_VERSION}");
    let _ = writeln!(out, "total_turn = {}", real(profile.total_turn()));
    for d in profile.descriptors() {
        let _ = write!(
            out,
            "\n[[descriptor]]\nk = {}\na = {}\nb = {}\n",
            d.k,
            real(d.a),
            real(d.b)
        );
    }
    out
}

pub fn read_angle_profile(text: &str) -> Result<AngleProfile> {
    let table = parse_versioned(text)?;
    let doc: AngleDoc = table
        .try_into()
        .map_err(|e: toml::de::Error| Error::Parse(e.to_string()))?;
    let descriptors = doc
        .descriptor
        .iter()
        .map(|d| Descriptor {
            k: d.k,
            a: d.a,
            b: d.b,
        })
        .collect();
    AngleProfile::new(doc.total_turn, descriptors).map_err(|e| Error::Parse(e.to_string()))
}

/// One row of a curve CSV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveRow {
    pub theta: f64,
    pub s: f64,
    pub x: f64,
    pub y: f64,
}

/// CSV with header `theta,s,x,y` and one row per sample.
pub fn write_curve_csv(curve: &PlaneCurve) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for ((p, t), s) in curve
        .points()
        .iter()
        .zip(curve.params())
        .zip(curve.arc_lengths())
    {
        w.serialize(CurveRow {
            theta: *t,
            s: *s,
            x: p.x,
            y: p.y,
        })
        .expect("writing to memory cannot fail");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is ASCII")
}

pub fn read_curve_csv(text: &str) -> Result<Vec<CurveRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize()
        .map(|row| row.map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
struct SampleRow {
    theta: f64,
    l: f64,
}

/// CSV with header `theta,l`: log-radius samples on a θ grid.
pub fn write_samples_csv(thetas: &[f64], values: &[f64]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for (&theta, &l) in thetas.iter().zip(values) {
        w.serialize(SampleRow { theta, l })
            .expect("writing to memory cannot fail");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv output is ASCII")
}

pub fn read_samples_csv(text: &str) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut thetas = Vec::new();
    let mut values = Vec::new();
    for row in r.deserialize::<SampleRow>() {
        let row = row.map_err(|e| Error::Parse(e.to_string()))?;
        thetas.push(row.theta);
        values.push(row.l);
    }
    Ok((thetas, values))
}
