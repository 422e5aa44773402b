//! Rank-3 pictures: the hemisphere `v·x > 0` stereographically projected
//! from `-v/|v|` onto the tangent plane at `v/|v|`.
//!
//! Coordinates are f64 approximations, used for drawing only.

use anyhow::{bail, Result};
use ncp_core::algebra::{FieldElement, Scalar, Vector};
use ncp_core::ExactPipeline;
use std::fmt::Write;

type P3 = [f64; 3];

const SIZE: f64 = 1000.0;
const SCALE: f64 = 225.0;
const ARC_STEPS: usize = 48;

fn dot(a: P3, b: P3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: P3, b: P3) -> P3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn unit(a: P3) -> P3 {
    let l = dot(a, a).sqrt();
    [a[0] / l, a[1] / l, a[2] / l]
}

/// Upper-triangular `U` with `UᵀU = G`, so `x ↦ Ux` is an isometry onto R³.
fn cholesky_upper(g: &[Vec<f64>]) -> [[f64; 3]; 3] {
    let mut u = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in i..3 {
            let s: f64 = g[i][j] - (0..i).map(|k| u[k][i] * u[k][j]).sum::<f64>();
            u[i][j] = if i == j { s.sqrt() } else { s / u[i][i] };
        }
    }
    u
}

struct Frame {
    u: [[f64; 3]; 3],
    w: P3,
    e1: P3,
    e2: P3,
}

impl Frame {
    fn euclid(&self, x: &Vector<FieldElement>) -> P3 {
        let x = x.to_f64();
        let mut out = [0.0; 3];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..3).map(|j| self.u[i][j] * x[j]).sum();
        }
        out
    }

    /// Screen position of a direction with `p·w > -1`.
    fn project(&self, p: P3) -> (f64, f64) {
        let p = unit(p);
        let k = 2.0 / (1.0 + dot(p, self.w));
        let (x, y) = (k * dot(p, self.e1), k * dot(p, self.e2));
        (SIZE / 2.0 + SCALE * x, SIZE / 2.0 - SCALE * y)
    }

    /// Points along the great arc from `a` to `b`.
    fn arc(&self, a: P3, b: P3) -> Vec<(f64, f64)> {
        let (a, b) = (unit(a), unit(b));
        let omega = dot(a, b).clamp(-1.0, 1.0).acos();
        (0..=ARC_STEPS)
            .map(|s| {
                let t = s as f64 / ARC_STEPS as f64;
                if omega < 1e-12 {
                    return self.project(a);
                }
                let (ka, kb) = (((1.0 - t) * omega).sin(), (t * omega).sin());
                self.project([ka * a[0] + kb * b[0], ka * a[1] + kb * b[1], ka * a[2] + kb * b[2]])
            })
            .collect()
    }
}

fn path(points: &[(f64, f64)], close: bool) -> String {
    let mut d = String::new();
    for (i, (x, y)) in points.iter().enumerate() {
        let _ = write!(d, "{}{:.2},{:.2}", if i == 0 { "M" } else { " L" }, x, y);
    }
    if close {
        d.push_str(" Z");
    }
    d
}

pub fn render(p: &ExactPipeline) -> Result<String> {
    let sys = &p.system;
    if sys.rank() != 3 {
        bail!("render needs rank 3, got rank {}", sys.rank());
    }
    let g = sys.gram();
    let gf: Vec<Vec<f64>> = (0..3).map(|i| (0..3).map(|j| g[(i, j)].approx()).collect()).collect();
    let mut frame = Frame {
        u: cholesky_upper(&gf),
        w: [0.0; 3],
        e1: [0.0; 3],
        e2: [0.0; 3],
    };
    frame.w = unit(frame.euclid(&p.generic.v));
    let helper = if frame.w[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    frame.e1 = unit(cross(helper, frame.w));
    frame.e2 = cross(frame.w, frame.e1);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1000 1000" width="1000" height="1000">"#
    );
    let _ = writeln!(svg, r#"<title>{}</title>"#, sys.input_diagram().label());
    let _ = writeln!(svg, r##"<rect width="1000" height="1000" fill="#ffffff"/>"##);

    // bounded-slice chambers
    let _ = writeln!(svg, r##"<g id="regions" fill="#c8d8f0" stroke="none">"##);
    for (ch, _) in p.chambers.iter().zip(&p.bounded).filter(|(_, &b)| b) {
        let corners: Vec<P3> = ch.rays.iter().map(|r| frame.euclid(r)).collect();
        let mut pts = Vec::new();
        for k in 0..corners.len() {
            let mut seg = frame.arc(corners[k], corners[(k + 1) % corners.len()]);
            seg.pop();
            pts.extend(seg);
        }
        let _ = writeln!(svg, r#"<path d="{}"/>"#, path(&pts, true));
    }
    let _ = writeln!(svg, "</g>");

    // reflection planes, clipped to the hemisphere
    let _ = writeln!(svg, r##"<g id="planes" fill="none" stroke="#555555" stroke-width="1.2">"##);
    for root in sys.positive_roots() {
        let n = unit(frame.euclid(root));
        // the great circle n^⊥ meets the hemisphere in a half circle from t to -t
        let mut t = cross(n, frame.w);
        if dot(t, t) < 1e-18 {
            continue;
        }
        t = unit(t);
        let top = unit(cross(t, n));
        let top = if dot(top, frame.w) < 0.0 { [-top[0], -top[1], -top[2]] } else { top };
        let mut pts = frame.arc(t, top);
        pts.pop();
        pts.extend(frame.arc(top, [-t[0], -t[1], -t[2]]));
        let _ = writeln!(svg, r#"<path d="{}"/>"#, path(&pts, false));
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(
        svg,
        r##"<circle cx="500" cy="500" r="{:.2}" fill="none" stroke="#999999" stroke-width="1"/>"##,
        2.0 * SCALE
    );

    // facets of μ(X(c))
    let verts: Vec<P3> = p.mu.vertices.iter().map(|x| frame.euclid(x)).collect();
    let _ = writeln!(svg, r##"<g id="facets" fill="none" stroke="#000000" stroke-width="4" stroke-linejoin="round">"##);
    for f in &p.mu.facets {
        let mut pts = Vec::new();
        for k in 0..f.len() {
            let mut seg = frame.arc(verts[f[k]], verts[f[(k + 1) % f.len()]]);
            seg.pop();
            pts.extend(seg);
        }
        let _ = writeln!(svg, r#"<path d="{}"/>"#, path(&pts, true));
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r#"<g id="labels" font-family="sans-serif" font-size="22" text-anchor="middle">"#);
    for (i, v) in verts.iter().enumerate() {
        let (x, y) = frame.project(*v);
        let _ = writeln!(
            svg,
            r##"<circle cx="{x:.2}" cy="{y:.2}" r="5" fill="#b00000"/><text x="{x:.2}" y="{:.2}">{}</text>"##,
            y - 10.0,
            i + 1
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}
