//! Standalone SVG plots of disks and zeros in the complex plane.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::geometry::Disk;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stroke {
    Solid,
    Dashed,
    Dotted,
    DashDot,
}

impl Stroke {
    /// Dash pattern in multiples of the stroke width.
    fn pattern(self) -> Option<&'static [f64]> {
        match self {
            Stroke::Solid => None,
            Stroke::Dashed => Some(&[6.0, 4.0]),
            Stroke::Dotted => Some(&[1.0, 2.5]),
            Stroke::DashDot => Some(&[7.0, 3.0, 1.0, 3.0]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlotCircle {
    pub disk: Disk,
    pub stroke: Stroke,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlotSpec {
    pub title: String,
    pub circles: Vec<PlotCircle>,
    /// Zeros, drawn as circled asterisks.
    pub markers: Vec<Complex64>,
    /// Width in pixels; the height follows from the equal-aspect viewport.
    pub size: u32,
}

impl PlotSpec {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            circles: Vec::new(),
            markers: Vec::new(),
            size: 600,
        }
    }

    pub fn circle(mut self, disk: Disk, stroke: Stroke) -> Self {
        self.circles.push(PlotCircle { disk, stroke });
        self
    }

    pub fn circles(mut self, disks: &[Disk], stroke: Stroke) -> Self {
        self.circles
            .extend(disks.iter().map(|&disk| PlotCircle { disk, stroke }));
        self
    }

    pub fn markers(mut self, zs: &[Complex64]) -> Self {
        self.markers.extend_from_slice(zs);
        self
    }

    /// `(xmin, ymin, xmax, ymax)` of the content plus a 10% margin.
    pub fn viewport(&self) -> (f64, f64, f64, f64) {
        let mut lo = Complex64::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Complex64::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut grow = |c: Complex64, r: f64| {
            lo.re = lo.re.min(c.re - r);
            lo.im = lo.im.min(c.im - r);
            hi.re = hi.re.max(c.re + r);
            hi.im = hi.im.max(c.im + r);
        };
        for c in &self.circles {
            grow(c.disk.center, c.disk.radius);
        }
        for &z in &self.markers {
            grow(z, 0.0);
        }
        if !lo.re.is_finite() {
            return (-1.0, -1.0, 1.0, 1.0);
        }
        let span = (hi.re - lo.re).max(hi.im - lo.im).max(1e-9);
        let m = 0.1 * span;
        (lo.re - m, lo.im - m, hi.re + m, hi.im + m)
    }
}

/// Short decimal form; stable across platforms.
fn num(x: f64) -> String {
    let s = format!("{x:.5}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_owned()
    } else {
        s.to_owned()
    }
}

pub fn render_svg(ps: &PlotSpec) -> Vec<u8> {
    let (x0, y0, x1, y1) = ps.viewport();
    let (w, h) = (x1 - x0, y1 - y0);
    let px_w = ps.size.max(1);
    let px_h = ((f64::from(px_w) * h / w).round() as u32).max(1);
    // one pixel in plane units
    let unit = w / f64::from(px_w);
    let sw = 1.5 * unit;

    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    // y is flipped so the imaginary axis points up
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{px_w}\" height=\"{px_h}\" viewBox=\"{} {} {} {}\">",
        num(x0),
        num(-y1),
        num(w),
        num(h)
    );
    let _ = writeln!(s, "<title>{}</title>", escape(&ps.title));
    let _ = writeln!(
        s,
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>",
        num(x0),
        num(-y1),
        num(w),
        num(h)
    );
    let axis = format!("stroke=\"#999999\" stroke-width=\"{}\"", num(0.75 * unit));
    if y0 <= 0.0 && 0.0 <= y1 {
        let _ = writeln!(
            s,
            "<line x1=\"{}\" y1=\"0\" x2=\"{}\" y2=\"0\" {axis}/>",
            num(x0),
            num(x1)
        );
    }
    if x0 <= 0.0 && 0.0 <= x1 {
        let _ = writeln!(
            s,
            "<line x1=\"0\" y1=\"{}\" x2=\"0\" y2=\"{}\" {axis}/>",
            num(-y1),
            num(-y0)
        );
    }

    for c in &ps.circles {
        let _ = write!(
            s,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"",
            num(c.disk.center.re),
            num(-c.disk.center.im),
            num(c.disk.radius),
            num(sw)
        );
        if let Some(pattern) = c.stroke.pattern() {
            let dashes: Vec<String> = pattern.iter().map(|d| num(d * sw)).collect();
            let _ = write!(s, " stroke-dasharray=\"{}\"", dashes.join(" "));
        }
        s.push_str("/>\n");
    }

    let mr = 5.0 * unit;
    for z in &ps.markers {
        let _ = writeln!(
            s,
            "<path d=\"{}\" fill=\"none\" stroke=\"#b00000\" stroke-width=\"{}\"/>",
            marker_path(z.re, -z.im, mr),
            num(sw)
        );
    }
    s.push_str("</svg>\n");
    s.into_bytes()
}

/// A circle made of two arcs plus three crossing strokes.
fn marker_path(x: f64, y: f64, r: f64) -> String {
    let mut d = format!(
        "M {} {} A {r} {r} 0 1 0 {} {} A {r} {r} 0 1 0 {} {} Z",
        num(x - r),
        num(y),
        num(x + r),
        num(y),
        num(x - r),
        num(y),
        r = num(r)
    );
    let arm = 0.7 * r;
    for k in 0..3 {
        let t = std::f64::consts::PI * k as f64 / 3.0 + std::f64::consts::FRAC_PI_2;
        let (dx, dy) = (arm * t.cos(), arm * t.sin());
        let _ = write!(
            d,
            " M {} {} L {} {}",
            num(x - dx),
            num(y - dy),
            num(x + dx),
            num(y + dy)
        );
    }
    d
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
