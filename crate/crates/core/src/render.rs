//! Deterministic SVG figures of a triangle and its Steiner ellipses.
//!
//! Ellipses are drawn as native `<ellipse>` elements straight from their
//! geometry, so the figure is exact rather than a contour of the implicit
//! equation. Plane coordinates map affinely onto a 900×900 canvas with the
//! y-axis pointing up.

use std::fmt::{self, Write};
use std::str::FromStr;

use crate::plane::{bounding_square, BoundingSquare, Complex, Triangle};
use crate::steiner::{EllipseGeometry, SteinerReport};

pub const CANVAS_PX: f64 = 900.0;
/// Gap between the canvas edge and the plotted square, room for the title.
pub const PLOT_MARGIN_PX: f64 = 60.0;
pub const DEFAULT_FOCI_THRESHOLD: f64 = 0.1;
/// Relative clearance kept between an ellipse's bounding box and the square.
pub const ELLIPSE_CLEARANCE: f64 = 0.05;
const MAX_GRID_LINES: f64 = 40.0;
const MARKER_RADIUS_PX: f64 = 4.0;

/// Which Steiner ellipse(s) to show.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Which {
    In,
    Circum,
    #[default]
    Both,
}

impl FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "in" => Ok(Which::In),
            "circum" => Ok(Which::Circum),
            "both" => Ok(Which::Both),
            other => Err(format!("expected one of in, circum, both; got `{other}`")),
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::In => "in",
            Which::Circum => "circum",
            Which::Both => "both",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipseRole {
    In,
    Circum,
}

impl EllipseRole {
    pub fn color(self) -> &'static str {
        match self {
            EllipseRole::In => "red",
            EllipseRole::Circum => "blue",
        }
    }

    fn class(self) -> &'static str {
        match self {
            EllipseRole::In => "in",
            EllipseRole::Circum => "circum",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MarkerStyle {
    /// Text only, used for the triangle vertices.
    Label,
    Center,
    Focus(EllipseRole),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Marker {
    pub at: Complex,
    pub label: String,
    pub style: MarkerStyle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlotScene {
    pub square: BoundingSquare,
    pub triangle: Triangle,
    pub ellipses: Vec<(EllipseGeometry, EllipseRole)>,
    pub markers: Vec<Marker>,
    /// Segments joining the foci of each ellipse whose foci are shown.
    pub focal_segments: Vec<(Complex, Complex, EllipseRole)>,
    pub title: String,
    pub show_foci_threshold: f64,
}

impl PlotScene {
    /// A scene with just the triangle, its vertex labels and the default plot square.
    pub fn triangle_only(triangle: Triangle, title: impl Into<String>) -> Self {
        let markers = vertex_labels(&triangle);
        Self {
            square: bounding_square(&triangle),
            triangle,
            ellipses: Vec::new(),
            markers,
            focal_segments: Vec::new(),
            title: title.into(),
            show_foci_threshold: DEFAULT_FOCI_THRESHOLD,
        }
    }
}

/// Two decimals, `%3.2f` style, without a negative zero.
pub fn fmt2(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

pub fn fmt2_complex(z: Complex) -> String {
    let im = fmt2(z.im);
    match im.strip_prefix('-') {
        Some(mag) => format!("{}-{}i", fmt2(z.re), mag),
        None => format!("{}+{}i", fmt2(z.re), im),
    }
}

fn vertex_labels(t: &Triangle) -> Vec<Marker> {
    t.vertices()
        .iter()
        .zip(["z1", "z2", "z3"])
        .map(|(&at, label)| Marker { at, label: label.to_string(), style: MarkerStyle::Label })
        .collect()
}

fn single_title(kind: &str, g: &EllipseGeometry, z0: Complex) -> String {
    format!(
        "Steiner {kind} ellipse of triangle z1, z2, z3, zF1={}, zF2={}, z0={}, a={}, b={}, e={}",
        fmt2_complex(g.f1),
        fmt2_complex(g.f2),
        fmt2_complex(z0),
        fmt2(g.a),
        fmt2(g.b),
        fmt2(g.ecc),
    )
}

pub fn build_scene(report: &SteinerReport, which: Which) -> PlotScene {
    build_scene_with_threshold(report, which, DEFAULT_FOCI_THRESHOLD)
}

pub fn build_scene_with_threshold(report: &SteinerReport, which: Which, threshold: f64) -> PlotScene {
    let z0 = report.centroid;
    let mut ellipses = Vec::new();
    if matches!(which, Which::In | Which::Both) {
        ellipses.push((report.in_geom, EllipseRole::In));
    }
    if matches!(which, Which::Circum | Which::Both) {
        ellipses.push((report.circ_geom, EllipseRole::Circum));
    }

    let mut square = bounding_square(&report.triangle);
    let center = square.center();
    let mut half = square.half_side();
    for (g, _) in &ellipses {
        let (hx, hy) = g.half_extents();
        let need_x = (g.center.re - center.re).abs() + (1.0 + ELLIPSE_CLEARANCE) * hx;
        let need_y = (g.center.im - center.im).abs() + (1.0 + ELLIPSE_CLEARANCE) * hy;
        half = half.max(need_x).max(need_y);
    }
    if half > square.half_side() {
        square = BoundingSquare::centered(center, half);
    }

    let mut markers = vertex_labels(&report.triangle);
    markers.push(Marker { at: z0, label: "z0".to_string(), style: MarkerStyle::Center });
    let mut focal_segments = Vec::new();
    for (g, role) in &ellipses {
        if g.ecc <= threshold {
            continue;
        }
        let suffix = match (which, role) {
            (Which::Both, EllipseRole::In) => "i",
            (Which::Both, EllipseRole::Circum) => "c",
            _ => "",
        };
        for (at, name) in [(g.f1, "zF1"), (g.f2, "zF2")] {
            markers.push(Marker { at, label: format!("{name}{suffix}"), style: MarkerStyle::Focus(*role) });
        }
        focal_segments.push((g.f1, g.f2, *role));
    }

    let title = match which {
        Which::In => single_title("in", &report.in_geom, z0),
        Which::Circum => single_title("circum", &report.circ_geom, z0),
        Which::Both => "Steiner in-ellipse red (foci zF1i, zF2i) and Steiner circum-ellipse blue (foci zF1c, zF2c)"
            .to_string(),
    };

    PlotScene {
        square,
        triangle: report.triangle,
        ellipses,
        markers,
        focal_segments,
        title,
        show_foci_threshold: threshold,
    }
}

/// Affine map between the plot square and canvas pixels (y flipped).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PixelMap {
    square: BoundingSquare,
    px_per_unit: f64,
}

impl PixelMap {
    pub fn new(square: BoundingSquare) -> Self {
        let px_per_unit = (CANVAS_PX - 2.0 * PLOT_MARGIN_PX) / square.side();
        Self { square, px_per_unit }
    }

    pub fn px_per_unit(&self) -> f64 {
        self.px_per_unit
    }

    pub fn to_pixel(&self, z: Complex) -> (f64, f64) {
        (
            PLOT_MARGIN_PX + (z.re - self.square.xmin) * self.px_per_unit,
            PLOT_MARGIN_PX + (self.square.ymax - z.im) * self.px_per_unit,
        )
    }

    pub fn to_plane(&self, px: f64, py: f64) -> Complex {
        Complex::new(
            self.square.xmin + (px - PLOT_MARGIN_PX) / self.px_per_unit,
            self.square.ymax - (py - PLOT_MARGIN_PX) / self.px_per_unit,
        )
    }
}

/// Shortest round-trip form, `-0` folded to `0`.
fn num(x: f64) -> String {
    format!("{}", x + 0.0)
}

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for ch in text.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(ch),
        }
    }
    out
}

fn grid_step(span: f64) -> f64 {
    let mut step = 1.0;
    loop {
        for m in [1.0, 2.0, 5.0] {
            if span / (m * step) <= MAX_GRID_LINES {
                return m * step;
            }
        }
        step *= 10.0;
    }
}

fn grid_values(lo: f64, hi: f64, step: f64) -> impl Iterator<Item = f64> {
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(move |k| k as f64 * step)
}

/// Renders the scene as a standalone SVG 1.1 document.
pub fn render(scene: &PlotScene) -> String {
    let map = PixelMap::new(scene.square);
    let sq = scene.square;
    let mut s = String::new();

    // writes into a String cannot fail
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="900" height="900" viewBox="0 0 900 900">"#
    );
    let _ = writeln!(s, r#"  <rect x="0" y="0" width="900" height="900" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"  <text class="title" x="450" y="30" text-anchor="middle" font-family="sans-serif" font-size="12">{}</text>"#,
        escape(&scene.title)
    );

    let step = grid_step(sq.side());
    let (left, top) = map.to_pixel(Complex::new(sq.xmin, sq.ymax));
    let (right, bottom) = map.to_pixel(Complex::new(sq.xmax, sq.ymin));
    let _ = writeln!(s, r##"  <g class="grid" stroke="#cccccc" stroke-width="0.5">"##);
    for x in grid_values(sq.xmin, sq.xmax, step) {
        let (px, _) = map.to_pixel(Complex::new(x, 0.0));
        let _ = writeln!(s, r#"    <line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, num(px), num(top), num(bottom));
    }
    for y in grid_values(sq.ymin, sq.ymax, step) {
        let (_, py) = map.to_pixel(Complex::new(0.0, y));
        let _ = writeln!(s, r#"    <line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, num(py), num(left), num(right));
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(s, r#"  <g class="ticks" font-family="sans-serif" font-size="10" fill="dimgray">"#);
    for x in grid_values(sq.xmin, sq.xmax, step) {
        let (px, _) = map.to_pixel(Complex::new(x, 0.0));
        let _ = writeln!(
            s,
            r#"    <text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            num(px),
            num(bottom + 14.0),
            num(x)
        );
    }
    for y in grid_values(sq.ymin, sq.ymax, step) {
        let (_, py) = map.to_pixel(Complex::new(0.0, y));
        let _ = writeln!(
            s,
            r#"    <text x="{}" y="{}" text-anchor="end">{}</text>"#,
            num(left - 4.0),
            num(py + 3.0),
            num(y)
        );
    }
    let _ = writeln!(s, "  </g>");
    let _ = writeln!(
        s,
        r#"  <rect class="frame" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black" stroke-width="1"/>"#,
        num(left),
        num(top),
        num(right - left),
        num(bottom - top)
    );

    let points: Vec<String> = scene
        .triangle
        .vertices()
        .iter()
        .map(|v| {
            let (x, y) = map.to_pixel(*v);
            format!("{},{}", num(x), num(y))
        })
        .collect();
    let _ = writeln!(
        s,
        r#"  <polygon class="triangle" points="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        points.join(" ")
    );

    for (g, role) in &scene.ellipses {
        let (cx, cy) = map.to_pixel(g.center);
        let _ = writeln!(
            s,
            r#"  <ellipse class="ellipse {}" cx="{}" cy="{}" rx="{}" ry="{}" transform="rotate({} {} {})" fill="none" stroke="{}" stroke-width="1.5"/>"#,
            role.class(),
            num(cx),
            num(cy),
            num(g.a * map.px_per_unit()),
            num(g.b * map.px_per_unit()),
            num(-g.theta.to_degrees()),
            num(cx),
            num(cy),
            role.color()
        );
    }

    for (f1, f2, role) in &scene.focal_segments {
        let (x1, y1) = map.to_pixel(*f1);
        let (x2, y2) = map.to_pixel(*f2);
        let _ = writeln!(
            s,
            r#"  <line class="focal-segment" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="1"/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2),
            role.color()
        );
    }

    for m in &scene.markers {
        let (x, y) = map.to_pixel(m.at);
        match m.style {
            MarkerStyle::Label => {}
            MarkerStyle::Center => {
                let _ = writeln!(
                    s,
                    r#"  <circle class="center" cx="{}" cy="{}" r="{}" fill="none" stroke="green" stroke-width="1.5"/>"#,
                    num(x),
                    num(y),
                    MARKER_RADIUS_PX
                );
            }
            MarkerStyle::Focus(role) => {
                let _ = writeln!(
                    s,
                    r#"  <circle class="focus" cx="{}" cy="{}" r="{}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
                    num(x),
                    num(y),
                    MARKER_RADIUS_PX,
                    role.color()
                );
            }
        }
        let _ = writeln!(
            s,
            r#"  <text class="label" x="{}" y="{}" font-family="sans-serif" font-size="12">{}</text>"#,
            num(x + 6.0),
            num(y - 6.0),
            escape(&m.label)
        );
    }

    let _ = writeln!(s, "</svg>");
    s
}
