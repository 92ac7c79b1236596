//! Log-radius profile calculus for convex plane curves.
//!
//! A convex curve is described by `l(θ) = log r(θ)`, the log of its radius of
//! curvature as a function of tangent angle. In this representation uniform
//! scaling is the addition of a constant, and shapes mix by pointwise
//! addition of their profiles:
//!
//! ```
//! use logradius::{Frequency, Interval, LogRadiusProfile};
//!
//! let window = Interval::new(0.0, 4.0 * std::f64::consts::PI).unwrap();
//! let spiral = LogRadiusProfile::spiral(-0.15, window).unwrap();
//! let ellipse = LogRadiusProfile::elementary(Frequency::integer(2).unwrap(), 0.4, 0.0)
//!     .unwrap()
//!     .with_domain(window);
//! let elliptic_spiral = spiral.add(&ellipse).unwrap();
//! let curve = logradius::render(&elliptic_spiral, 1024).unwrap();
//! assert!(!curve.is_closed());
//! ```
//!
//! Modules:
//! - [`profile`]: profile types and the vector-space operations;
//! - [`hilbert`]: inner product and norm;
//! - [`render`]: integration into sampled plane curves and geometric checks;
//! - [`spectrum`]: decomposition of periodic profiles into elementary components;
//! - [`angle`]: the classical angle profile / Fourier descriptor representation;
//! - [`io`] and [`svg`]: documents, CSV and SVG output.

// NaN-rejecting comparisons are written as negations on purpose.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angle;
pub mod error;
pub mod hilbert;
pub mod io;
pub mod profile;
pub mod quadrature;
pub mod render;
pub mod roots;
pub mod spectrum;
pub mod svg;

pub use error::{Error, ErrorKind, Result};
pub use hilbert::{inner_product, inner_product_with, norm};
pub use profile::{ElementaryComponent, Frequency, Interval, LogRadiusProfile};
pub use quadrature::Quadrature;
pub use render::{closure_gap, normalize, render, rotational_symmetry_error, PlaneCurve, Point};
pub use spectrum::{decompose, reconstruct, ShapeSpectrum, SpectralBin};
