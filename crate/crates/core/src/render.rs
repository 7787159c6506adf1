//! Standalone SVG renderings of the symbolic correlation circle and the
//! symbolic principal plane.
//!
//! Coordinates are written in shortest round-trip form, so every rectangle
//! can be mapped back to its source intervals exactly through
//! [`CircleFrame`] or [`PlaneFrame`]. Output is a pure function of the input.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalMatrix};
use crate::table::format_number as num;

/// Radius of the unit circle as a fraction of the smaller viewport side.
pub const CIRCLE_RADIUS_FACTOR: f64 = 0.42;
/// Padding added on each side of the principal-plane data range, as a
/// fraction of that range.
pub const PLANE_PADDING: f64 = 0.05;

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939",
];

/// Color of row `i`, cycling through a fixed 12-color palette.
pub fn palette_color(i: usize) -> &'static str {
    PALETTE[i % PALETTE.len()]
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotSpec {
    /// 1-based component on the horizontal axis.
    pub axis_x: usize,
    /// 1-based component on the vertical axis.
    pub axis_y: usize,
    pub width: u32,
    pub height: u32,
    pub labels: bool,
    pub title: String,
}

impl Default for PlotSpec {
    fn default() -> Self {
        PlotSpec {
            axis_x: 1,
            axis_y: 2,
            width: 600,
            height: 600,
            labels: true,
            title: String::new(),
        }
    }
}

impl PlotSpec {
    pub fn with_axes(mut self, x: usize, y: usize) -> Self {
        self.axis_x = x;
        self.axis_y = y;
        self
    }

    pub fn with_title(mut self, title: impl Into<String>) -> Self {
        self.title = title.into();
        self
    }

    /// Zero-based column indices for a table with `q` components.
    fn columns(&self, q: usize) -> Result<(usize, usize)> {
        let (x, y) = (self.axis_x, self.axis_y);
        if x == y || x == 0 || y == 0 || x > q || y > q {
            return Err(Error::AxisOutOfRange { x, y, q });
        }
        Ok((x - 1, y - 1))
    }
}

/// Affine map between correlation coordinates and SVG pixels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleFrame {
    pub cx: f64,
    pub cy: f64,
    pub radius: f64,
}

impl CircleFrame {
    pub fn new(width: u32, height: u32) -> Self {
        let (w, h) = (f64::from(width), f64::from(height));
        CircleFrame {
            cx: w / 2.0,
            cy: h / 2.0,
            radius: CIRCLE_RADIUS_FACTOR * w.min(h),
        }
    }

    pub fn to_svg(&self, x: f64, y: f64) -> (f64, f64) {
        (self.cx + self.radius * x, self.cy - self.radius * y)
    }

    pub fn from_svg(&self, sx: f64, sy: f64) -> (f64, f64) {
        ((sx - self.cx) / self.radius, (self.cy - sy) / self.radius)
    }
}

/// Affine map between score coordinates and SVG pixels. The visible range
/// is the hull of the data and the origin, padded on every side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneFrame {
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub width: f64,
    pub height: f64,
}

fn padded(lo: f64, hi: f64) -> (f64, f64) {
    let (lo, hi) = (lo.min(0.0), hi.max(0.0));
    let span = if hi > lo { hi - lo } else { 1.0 };
    (lo - PLANE_PADDING * span, hi + PLANE_PADDING * span)
}

impl PlaneFrame {
    pub fn fit(xs: &[Interval], ys: &[Interval], width: u32, height: u32) -> Self {
        let hull = |v: &[Interval]| {
            v.iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), iv| {
                    (a.min(iv.lo()), b.max(iv.hi()))
                })
        };
        let (x0, x1) = hull(xs);
        let (y0, y1) = hull(ys);
        PlaneFrame {
            x_range: padded(x0, x1),
            y_range: padded(y0, y1),
            width: f64::from(width),
            height: f64::from(height),
        }
    }

    pub fn to_svg(&self, x: f64, y: f64) -> (f64, f64) {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        (
            (x - x0) / (x1 - x0) * self.width,
            (y1 - y) / (y1 - y0) * self.height,
        )
    }

    pub fn from_svg(&self, sx: f64, sy: f64) -> (f64, f64) {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        (
            x0 + sx / self.width * (x1 - x0),
            y1 - sy / self.height * (y1 - y0),
        )
    }
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(c),
        }
    }
    out
}

fn header(out: &mut String, spec: &PlotSpec) {
    let (w, h) = (spec.width, spec.height);
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    if !spec.title.is_empty() {
        let _ = writeln!(out, "<title>{}</title>", escape(&spec.title));
    }
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>"
    );
    if !spec.title.is_empty() {
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"16\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">{}</text>",
            num(f64::from(w) / 2.0),
            escape(&spec.title)
        );
    }
}

fn line(out: &mut String, (x1, y1): (f64, f64), (x2, y2): (f64, f64)) {
    let _ = writeln!(
        out,
        "<line class=\"axis\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999999\" stroke-width=\"1\"/>",
        num(x1),
        num(y1),
        num(x2),
        num(y2)
    );
}

/// Writes one stroked box. `(left, top)` and `(right, bottom)` are pixel
/// corners.
fn boxed(
    out: &mut String,
    label: &str,
    color: &str,
    (left, top): (f64, f64),
    (right, bottom): (f64, f64),
) {
    let _ = writeln!(
        out,
        "<rect class=\"box\" data-label=\"{}\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>",
        escape(label),
        num(left),
        num(top),
        num(right - left),
        num(bottom - top)
    );
}

fn label(out: &mut String, text: &str, color: &str, (x, y): (f64, f64), anchor: &str) {
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"{anchor}\" fill=\"{color}\">{}</text>",
        num(x),
        num(y),
        escape(text)
    );
}

/// Symbolic correlation circle: each variable is drawn as the rectangle of
/// its interval correlations with the two chosen components, inside the
/// unit circle. Expects correlations already clamped to `[-1, 1]`.
pub fn render_circle(correlations: &IntervalMatrix, spec: &PlotSpec) -> Result<String> {
    let (cx_col, cy_col) = spec.columns(correlations.n_cols())?;
    let frame = CircleFrame::new(spec.width, spec.height);
    let mut out = String::new();
    header(&mut out, spec);
    let _ = writeln!(
        out,
        "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>",
        num(frame.cx),
        num(frame.cy),
        num(frame.radius)
    );
    line(&mut out, frame.to_svg(-1.0, 0.0), frame.to_svg(1.0, 0.0));
    line(&mut out, frame.to_svg(0.0, -1.0), frame.to_svg(0.0, 1.0));
    let pcs = correlations.col_labels();
    let (ex, ey) = frame.to_svg(1.0, 0.0);
    label(
        &mut out,
        &pcs[cx_col],
        "#444444",
        (ex - 2.0, ey - 4.0),
        "end",
    );
    let (ex, ey) = frame.to_svg(0.0, 1.0);
    label(
        &mut out,
        &pcs[cy_col],
        "#444444",
        (ex + 4.0, ey + 12.0),
        "start",
    );

    for (i, name) in correlations.row_labels().iter().enumerate() {
        let rx = correlations.get(i, cx_col);
        let ry = correlations.get(i, cy_col);
        let color = palette_color(i);
        boxed(
            &mut out,
            name,
            color,
            frame.to_svg(rx.lo(), ry.hi()),
            frame.to_svg(rx.hi(), ry.lo()),
        );
        if spec.labels {
            let (x, y) = frame.to_svg(rx.midpoint(), ry.midpoint());
            label(&mut out, name, color, (x, y + 4.0), "middle");
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Symbolic principal plane: each object is drawn as the rectangle of its
/// interval scores on the two chosen components. Degenerate rectangles get
/// an extra 2-px marker so they stay visible.
pub fn render_plane(scores: &IntervalMatrix, spec: &PlotSpec) -> Result<String> {
    let (cx_col, cy_col) = spec.columns(scores.n_cols())?;
    let m = scores.n_rows();
    let xs: Vec<Interval> = (0..m).map(|i| scores.get(i, cx_col)).collect();
    let ys: Vec<Interval> = (0..m).map(|i| scores.get(i, cy_col)).collect();
    let frame = PlaneFrame::fit(&xs, &ys, spec.width, spec.height);
    let mut out = String::new();
    header(&mut out, spec);
    line(
        &mut out,
        frame.to_svg(frame.x_range.0, 0.0),
        frame.to_svg(frame.x_range.1, 0.0),
    );
    line(
        &mut out,
        frame.to_svg(0.0, frame.y_range.0),
        frame.to_svg(0.0, frame.y_range.1),
    );
    let pcs = scores.col_labels();
    let (ex, ey) = frame.to_svg(frame.x_range.1, 0.0);
    label(
        &mut out,
        &pcs[cx_col],
        "#444444",
        (ex - 2.0, ey - 4.0),
        "end",
    );
    let (ex, ey) = frame.to_svg(0.0, frame.y_range.1);
    label(
        &mut out,
        &pcs[cy_col],
        "#444444",
        (ex + 4.0, ey + 12.0),
        "start",
    );

    for (i, name) in scores.row_labels().iter().enumerate() {
        let (rx, ry) = (xs[i], ys[i]);
        let color = palette_color(i);
        let top_left = frame.to_svg(rx.lo(), ry.hi());
        let bottom_right = frame.to_svg(rx.hi(), ry.lo());
        boxed(&mut out, name, color, top_left, bottom_right);
        if rx.is_degenerate() || ry.is_degenerate() {
            let (mx, my) = frame.to_svg(rx.midpoint(), ry.midpoint());
            let _ = writeln!(
                out,
                "<circle class=\"marker\" cx=\"{}\" cy=\"{}\" r=\"2\" fill=\"{color}\"/>",
                num(mx),
                num(my)
            );
        }
        if spec.labels {
            label(
                &mut out,
                name,
                color,
                (top_left.0 + 2.0, top_left.1 - 3.0),
                "start",
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
