//! SVG galleries of normalized curves laid out on a grid.
//!
//! Output uses only `svg`, `g`, `path` and `text` elements and fixed-precision
//! coordinates, so identical input gives byte-identical output.

use std::fmt::Write as _;

use crate::render::PlaneCurve;

#[derive(Debug, Clone, PartialEq)]
pub struct Style {
    pub stroke: String,
    pub stroke_width: f64,
    pub label: Option<String>,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            stroke: "#1f3b73".into(),
            stroke_width: 1.5,
            label: None,
        }
    }
}

impl Style {
    pub fn labeled(label: impl Into<String>) -> Self {
        Style {
            label: Some(label.into()),
            ..Style::default()
        }
    }
}

/// Grid of square cells. A curve normalized to unit reach fills
/// `fill` of a cell's half-width.
#[derive(Debug, Clone, PartialEq)]
pub struct GridLayout {
    pub columns: usize,
    pub cell_size: f64,
    pub margin: f64,
    pub fill: f64,
    pub title: Option<String>,
}

impl Default for GridLayout {
    fn default() -> Self {
        GridLayout {
            columns: 3,
            cell_size: 160.0,
            margin: 10.0,
            fill: 0.75,
            title: None,
        }
    }
}

impl GridLayout {
    pub fn with_columns(columns: usize) -> Self {
        GridLayout {
            columns,
            ..GridLayout::default()
        }
    }

    pub fn titled(mut self, title: impl Into<String>) -> Self {
        self.title = Some(title.into());
        self
    }
}

const TITLE_HEIGHT: f64 = 24.0;
const LABEL_SIZE: f64 = 12.0;

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn path_data(curve: &PlaneCurve, cx: f64, cy: f64, scale: f64) -> String {
    let mut d = String::new();
    let mut last = String::new();
    for (i, p) in curve.points().iter().enumerate() {
        let xy = format!("{:.3} {:.3}", cx + scale * p.x, cy - scale * p.y);
        if xy == last {
            continue;
        }
        d.push_str(if i == 0 { "M" } else { " L" });
        d.push_str(&xy);
        last = xy;
    }
    if curve.is_closed() {
        d.push_str(" Z");
    }
    d
}

/// One `path` per curve, placed row-major on the grid. Curves are expected
/// to be normalized (centroid at the origin, reach 1).
pub fn write_svg(curves: &[(PlaneCurve, Style)], layout: &GridLayout) -> String {
    let columns = layout.columns.max(1);
    let rows = curves.len().div_ceil(columns);
    let top = layout.margin
        + if layout.title.is_some() {
            TITLE_HEIGHT
        } else {
            0.0
        };
    let width = 2.0 * layout.margin + layout.cell_size * columns as f64;
    let height = top + layout.margin + layout.cell_size * rows as f64;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.3} {height:.3}">"#
    );
    if let Some(title) = &layout.title {
        let _ = writeln!(
            out,
            r#"  <text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="16" text-anchor="middle">{}</text>"#,
            width / 2.0,
            layout.margin + 16.0,
            escape(title)
        );
    }
    let half = layout.cell_size / 2.0;
    let label_room = LABEL_SIZE + 4.0;
    for (i, (curve, style)) in curves.iter().enumerate() {
        let (row, col) = (i / columns, i % columns);
        let x0 = layout.margin + col as f64 * layout.cell_size;
        let y0 = top + row as f64 * layout.cell_size;
        let cx = x0 + half;
        let cy = y0 + half
            - if style.label.is_some() {
                label_room / 2.0
            } else {
                0.0
            };
        let scale = layout.fill
            * (half
                - if style.label.is_some() {
                    label_room / 2.0
                } else {
                    0.0
                });
        let _ = writeln!(out, "  <g>");
        let _ = writeln!(
            out,
            r#"    <path d="{}" fill="none" stroke="{}" stroke-width="{:.3}" stroke-linejoin="round"/>"#,
            path_data(curve, cx, cy, scale),
            escape(&style.stroke),
            style.stroke_width
        );
        if let Some(label) = &style.label {
            let _ = writeln!(
                out,
                r#"    <text x="{cx:.3}" y="{:.3}" font-family="sans-serif" font-size="{LABEL_SIZE:.0}" text-anchor="middle">{}</text>"#,
                y0 + layout.cell_size - 6.0,
                escape(label)
            );
        }
        let _ = writeln!(out, "  </g>");
    }
    out.push_str("</svg>\n");
    out
}
