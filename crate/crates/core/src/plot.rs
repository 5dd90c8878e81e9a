//! SVG figures in the upper half-plane: the causal future of the identity,
//! its light-cone boundary, the absolute `y = 0`, and for negative curvature
//! the frontier ray and the infinite-distance region.

use std::fmt::Write;

use crate::causal::point_b;
use crate::group::GroupPoint;
use crate::problem::{CurvatureSign, Problem};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const PAD: f64 = 30.0;

/// A series drawn on top of the causal background.
pub enum Layer<'a> {
    Polyline { points: &'a [GroupPoint], color: &'a str },
    Dots { points: &'a [GroupPoint], color: &'a str },
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn sx(&self, x: f64) -> f64 {
        PAD + (x - self.x0) / (self.x1 - self.x0) * (WIDTH - 2.0 * PAD)
    }

    fn sy(&self, y: f64) -> f64 {
        HEIGHT - PAD - (y - self.y0) / (self.y1 - self.y0) * (HEIGHT - 2.0 * PAD)
    }

    fn rect(&self) -> Vec<(f64, f64)> {
        vec![(self.x0, self.y0), (self.x1, self.y0), (self.x1, self.y1), (self.x0, self.y1)]
    }
}

/// Clips a convex polygon to `{p : a·x + b·y + c ≥ 0}`.
fn clip(poly: &[(f64, f64)], a: f64, b: f64, c: f64) -> Vec<(f64, f64)> {
    let side = |p: &(f64, f64)| a * p.0 + b * p.1 + c;
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let p = poly[i];
        let q = poly[(i + 1) % poly.len()];
        let (sp, sq) = (side(&p), side(&q));
        if sp >= 0.0 {
            out.push(p);
        }
        if (sp >= 0.0) != (sq >= 0.0) {
            let t = sp / (sp - sq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

fn polygon(svg: &mut String, f: &Frame, poly: &[(f64, f64)], fill: &str) {
    if poly.len() < 3 {
        return;
    }
    let pts: Vec<String> = poly.iter().map(|p| format!("{:.2},{:.2}", f.sx(p.0), f.sy(p.1))).collect();
    let _ = writeln!(svg, r#"<polygon points="{}" fill="{fill}" stroke="none"/>"#, pts.join(" "));
}

/// Draws the part of the line `a·x + b·y + c = 0` inside the frame.
fn line(svg: &mut String, f: &Frame, a: f64, b: f64, c: f64, style: &str) {
    let strip = clip(&clip(&f.rect(), a, b, c + 1e-12), -a, -b, -c + 1e-12);
    if strip.len() < 2 {
        return;
    }
    // the degenerate strip's extreme vertices are the segment ends
    let (mut lo, mut hi) = (strip[0], strip[0]);
    let dir = (-b, a);
    for p in &strip {
        let s = p.0 * dir.0 + p.1 * dir.1;
        if s < lo.0 * dir.0 + lo.1 * dir.1 {
            lo = *p;
        }
        if s > hi.0 * dir.0 + hi.1 * dir.1 {
            hi = *p;
        }
    }
    let _ = writeln!(
        svg,
        r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {style}/>"#,
        f.sx(lo.0),
        f.sy(lo.1),
        f.sx(hi.0),
        f.sy(hi.1)
    );
}

/// Renders the layers over the causal structure of `spec`.
pub fn render(spec: &Problem, title: &str, layers: &[Layer<'_>]) -> String {
    let mut xs = vec![-1.0, 1.0];
    let mut ys = vec![0.0, 2.0];
    for layer in layers {
        let pts = match layer {
            Layer::Polyline { points, .. } | Layer::Dots { points, .. } => points,
        };
        for p in pts.iter() {
            xs.push(p.x());
            ys.push(p.y());
        }
    }
    let fold = |v: &[f64], init: f64, g: fn(f64, f64) -> f64| v.iter().copied().fold(init, g);
    let (mut x0, mut x1) = (fold(&xs, f64::INFINITY, f64::min), fold(&xs, f64::NEG_INFINITY, f64::max));
    let y1 = fold(&ys, f64::NEG_INFINITY, f64::max);
    let mx = 0.05 * (x1 - x0);
    x0 -= mx;
    x1 += mx;
    let f = Frame {
        x0,
        x1,
        y0: -0.05 * y1,
        y1: 1.05 * y1,
    };
    let m = spec.matrix();
    let (p1, q1, r1) = (m.c - m.a, m.d - m.b, -(m.d - m.b));
    let (p2, q2, r2) = (m.c + m.a, m.d + m.b, -(m.d + m.b));

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, "<title>{title}</title>");
    let _ = writeln!(
        svg,
        r#"<defs><clipPath id="plot"><rect x="{PAD}" y="{PAD}" width="{}" height="{}"/></clipPath></defs>"#,
        WIDTH - 2.0 * PAD,
        HEIGHT - 2.0 * PAD
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(svg, r#"<g clip-path="url(#plot)">"#);
    // causal future: λ₁ ≤ 0 ≤ λ₂ above the absolute
    let upper = clip(&f.rect(), 0.0, 1.0, 0.0);
    let future = clip(&clip(&upper, -p1, -q1, -r1), p2, q2, r2);
    polygon(&mut svg, &f, &future, "#dbe9f6");
    if spec.sign == CurvatureSign::Neg {
        if let Ok((bx, _)) = point_b(spec) {
            let l1b = p1 * bx - q1;
            // E: λ₁ < λ₁(B), λ₂ ≥ 0
            let e = clip(&clip(&upper, -p1, -q1, -(r1 - l1b)), p2, q2, r2);
            polygon(&mut svg, &f, &e, "#f6d5d5");
            line(&mut svg, &f, p1, q1, r1 - l1b, r##"stroke="#b22222" stroke-width="1.5" stroke-dasharray="6 3""##);
        }
    }
    line(&mut svg, &f, 0.0, 1.0, 0.0, r##"stroke="#444" stroke-width="1""##);
    line(&mut svg, &f, p1, q1, r1, r##"stroke="#1f5fa8" stroke-width="1.2""##);
    line(&mut svg, &f, p2, q2, r2, r##"stroke="#1f5fa8" stroke-width="1.2""##);
    for layer in layers {
        match layer {
            Layer::Polyline { points, color } => {
                let pts: Vec<String> = points.iter().map(|p| format!("{:.2},{:.2}", f.sx(p.x()), f.sy(p.y()))).collect();
                let _ = writeln!(svg, r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#, pts.join(" "));
            }
            Layer::Dots { points, color } => {
                for p in points.iter() {
                    let _ = writeln!(svg, r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="{color}"/>"#, f.sx(p.x()), f.sy(p.y()));
                }
            }
        }
    }
    let _ = writeln!(svg, r#"<circle cx="{:.2}" cy="{:.2}" r="3.5" fill="black"/>"#, f.sx(0.0), f.sy(1.0));
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(
        svg,
        r#"<text x="{PAD}" y="{:.0}" font-family="sans-serif" font-size="12">x ∈ [{:.3}, {:.3}], y ∈ [0, {:.3}]</text>"#,
        HEIGHT - 8.0,
        f.x0,
        f.x1,
        f.y1
    );
    svg.push_str("</svg>\n");
    svg
}
