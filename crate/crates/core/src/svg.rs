//! Deterministic SVG output. Coordinates are written as given with y negated, so the
//! picture has the usual mathematical orientation. Stroke widths scale with the
//! drawing's extent: `span / 400` for plain edges, three times that for shared edges.

use std::fmt::Write;

use crate::geometry::Point;
use crate::pointset::StraightLineDrawing;
use crate::sefe::SefeCertificate;

const STYLE: &str = ".g1{stroke:#1f4e79}.g2{stroke:#c0504d}.shared{stroke:#2e7d32}.v{fill:#222}.v2{fill:#c0504d}";

struct Frame {
    out: String,
    stroke: f64,
    radius: f64,
}

impl Frame {
    fn open(points: &[Point]) -> Self {
        let (lo_x, hi_x) = bounds(points.iter().map(|p| p.x));
        let (lo_y, hi_y) = bounds(points.iter().map(|p| -p.y));
        let span = (hi_x - lo_x).max(hi_y - lo_y).max(1);
        let pad = span / 20 + 1;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
            lo_x - pad,
            lo_y - pad,
            hi_x - lo_x + 2 * pad,
            hi_y - lo_y + 2 * pad
        );
        let _ = writeln!(out, "<style>{STYLE}</style>");
        Frame { out, stroke: span as f64 / 400.0, radius: span as f64 / 120.0 }
    }

    fn group(&mut self, id: &str) {
        let _ = writeln!(self.out, "<g id=\"{id}\">");
    }

    fn end_group(&mut self) {
        let _ = writeln!(self.out, "</g>");
    }

    fn line(&mut self, class: &str, a: Point, b: Point) {
        let (width, dash) = match class {
            "shared" => (self.stroke * 3.0, String::new()),
            "g2" => (self.stroke, format!(r#" stroke-dasharray="{d},{d}""#, d = self.stroke * 6.0)),
            _ => (self.stroke, String::new()),
        };
        let _ = writeln!(
            self.out,
            r#"<line class="{class}" stroke-width="{width}"{dash} x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            a.x, -a.y, b.x, -b.y
        );
    }

    fn vertex(&mut self, class: &str, p: Point, label: usize) {
        let _ = writeln!(
            self.out,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}"><title>{label}</title></circle>"#,
            p.x,
            -p.y,
            self.radius
        );
    }

    fn close(mut self) -> String {
        let _ = writeln!(self.out, "</svg>");
        self.out
    }
}

fn bounds(it: impl Iterator<Item = i64>) -> (i64, i64) {
    it.fold(None, |acc: Option<(i64, i64)>, v| match acc {
        None => Some((v, v)),
        Some((a, b)) => Some((a.min(v), b.max(v))),
    })
    .unwrap_or((0, 1))
}

/// One straight-line drawing: solid edges, vertices titled by id.
pub fn render_drawing_svg(d: &StraightLineDrawing) -> String {
    let mut f = Frame::open(&d.placement);
    f.group("edges");
    for (a, b) in d.graph.edges() {
        f.line("g1", d.placement[a], d.placement[b]);
    }
    f.end_group();
    f.group("vertices");
    for (v, &p) in d.placement.iter().enumerate() {
        f.vertex("v", p, v);
    }
    f.end_group();
    f.close()
}

/// Both drawings of a certificate: `G1[V']` solid, `G2` dashed, shared edges
/// highlighted on top. Points reserved for `G2` are drawn in the `G2` color.
pub fn render_svg(c: &SefeCertificate) -> String {
    let pts: Vec<Point> = c.gamma1_sub.points.iter().chain(c.gamma2.iter()).copied().collect();
    let mut f = Frame::open(&pts);
    let verts = &c.gamma1_sub.vertices;
    let at = |v: usize| verts.binary_search(&v).ok().map(|i| c.gamma1_sub.points[i]);

    f.group("g1");
    for (u, rot) in c.g1.rotations.iter().enumerate() {
        for &v in rot.iter().filter(|&&v| u < v) {
            if let (Some(p), Some(q)) = (at(u), at(v)) {
                f.line("g1", p, q);
            }
        }
    }
    f.end_group();
    f.group("g2");
    for (a, rot) in c.g2.rotations.iter().enumerate() {
        for &b in rot.iter().filter(|&&b| a < b) {
            f.line("g2", c.gamma2[a], c.gamma2[b]);
        }
    }
    f.end_group();
    f.group("shared");
    for e in &c.shared_edges {
        f.line("shared", c.gamma2[e.g2.0], c.gamma2[e.g2.1]);
    }
    f.end_group();
    f.group("vertices");
    for (i, &p) in c.gamma1_sub.points.iter().enumerate() {
        let class = if c.gamma2.contains(&p) { "v2" } else { "v" };
        f.vertex(class, p, verts[i]);
    }
    f.end_group();
    f.close()
}
