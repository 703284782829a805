//! Simultaneous embedding with fixed edges of a planar graph `G1` and a smaller planar
//! graph `G2`.
//!
//! `G2` is drawn in general position; its vertices become points reserved for white
//! vertices of `G1`. The outerplane graph `G1[V']` is then embedded on those points plus
//! padding, which fixes the mapping of `G2` into `G1`.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use crate::svg::render_svg;

use crate::cycle_breaker::extract_outerplane_set;
use crate::error::{Error, Result};
use crate::geometry::{orient, Point};
use crate::plane_graph::{induced_subgraph, PlaneGraph, PlaneGraphFile};
use crate::pointset::{
    draw_general_position, embed_on_points, verify_drawing, PointSet, StraightLineDrawing,
};
use crate::verification::is_outerplane;

/// Drawing of `G1[vertices]`; `points[i]` belongs to `vertices[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubDrawing {
    pub vertices: Vec<usize>,
    pub points: Vec<Point>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SharedEdge {
    pub g2: (usize, usize),
    pub g1: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SefeCertificate {
    pub g1: PlaneGraphFile,
    pub g2: PlaneGraphFile,
    pub v_prime: Vec<usize>,
    pub achieved_bound: usize,
    pub gamma2: Vec<Point>,
    pub gamma1_sub: SubDrawing,
    /// `mapping[x]` is the vertex of `G1` drawn at the point of vertex `x` of `G2`.
    pub mapping: Vec<usize>,
    pub shared_edges: Vec<SharedEdge>,
    /// Embedding of all of `G1` whose restriction to `V'` is the drawn one.
    pub extension: PlaneGraphFile,
}

impl SefeCertificate {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub checks: Vec<(String, bool)>,
}

impl CertificateReport {
    pub fn is_valid(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.1)
    }

    fn record(&mut self, name: &str, ok: bool) -> bool {
        self.checks.push((name.to_string(), ok));
        ok
    }
}

/// Adds points inside the bounding box of `base` until there are `total`, keeping
/// every triple non-collinear. A box narrower than 64 in either direction is widened.
fn pad_points(base: &[Point], total: usize, seed: u64) -> Vec<Point> {
    let mut pts = base.to_vec();
    if pts.len() >= total {
        return pts;
    }
    let span = |f: fn(&Point) -> i64| {
        (base.iter().map(f).min().unwrap_or(0), base.iter().map(f).max().unwrap_or(0))
    };
    let (mut lo_x, mut hi_x) = span(|p| p.x);
    let (mut lo_y, mut hi_y) = span(|p| p.y);
    if hi_x - lo_x < 64 {
        lo_x -= 32;
        hi_x = lo_x + 128;
    }
    if hi_y - lo_y < 64 {
        lo_y -= 32;
        hi_y = lo_y + 128;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    while pts.len() < total {
        let p = Point::new(rng.gen_range(lo_x..=hi_x), rng.gen_range(lo_y..=hi_y));
        let clash = pts.contains(&p)
            || (0..pts.len()).any(|i| {
                (i + 1..pts.len()).any(|j| orient(pts[i], pts[j], p) == std::cmp::Ordering::Equal)
            });
        if !clash {
            pts.push(p);
        }
    }
    pts
}

pub fn build_sefe(g1: &PlaneGraph, g2: &PlaneGraph) -> Result<SefeCertificate> {
    g1.check()?;
    g2.check()?;
    let v_prime = extract_outerplane_set(g1)?.v_prime;
    let n2 = g2.vertex_count();
    if n2 > v_prime.len() {
        return Err(Error::SecondGraphTooLarge { n2, available: v_prime.len() });
    }
    let gamma2 = draw_general_position(g2)?;
    let seed = 0x5efe_u64 ^ ((g1.vertex_count() as u64) << 32) ^ n2 as u64;
    let points = pad_points(&gamma2.placement, v_prime.len(), seed);
    let sub = induced_subgraph(g1, &v_prime)?;
    let drawing = embed_on_points(&sub.graph, &PointSet::new(points))?;

    let at: HashMap<Point, usize> =
        drawing.placement.iter().enumerate().map(|(i, &p)| (p, sub.to_host[i])).collect();
    let mapping: Vec<usize> = gamma2
        .placement
        .iter()
        .map(|p| at.get(p).copied().ok_or_else(|| Error::Invariant("reserved point unused".into())))
        .collect::<Result<_>>()?;
    let mut shared_edges: Vec<SharedEdge> = g2
        .edges()
        .into_iter()
        .filter(|&(a, b)| g1.has_edge(mapping[a], mapping[b]))
        .map(|(a, b)| SharedEdge { g2: (a, b), g1: (mapping[a], mapping[b]) })
        .collect();
    shared_edges.sort();

    Ok(SefeCertificate {
        g1: g1.to_file(),
        g2: g2.to_file(),
        achieved_bound: v_prime.len(),
        gamma1_sub: SubDrawing { vertices: v_prime.clone(), points: drawing.placement },
        v_prime,
        gamma2: gamma2.placement,
        mapping,
        shared_edges,
        extension: g1.to_file(),
    })
}

/// Re-checks every claim of a certificate from its raw data.
pub fn verify_certificate(c: &SefeCertificate) -> CertificateReport {
    let mut r = CertificateReport::default();
    let parsed = (
        PlaneGraph::from_file(c.g1.clone()),
        PlaneGraph::from_file(c.g2.clone()),
        PlaneGraph::from_file(c.extension.clone()),
    );
    let (g1, g2, ext) = match parsed {
        (Ok(a), Ok(b), Ok(e)) => (a, b, e),
        _ => {
            r.record("graphs parse", false);
            return r;
        }
    };
    let valid = g1.validate().is_valid() && g2.validate().is_valid() && ext.validate().is_valid();
    if !r.record("graphs are valid plane graphs", valid) {
        return r;
    }
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();

    let g2_drawing = StraightLineDrawing { graph: g2.clone(), placement: c.gamma2.clone() };
    let gamma2_ok = c.gamma2.len() == n2
        && PointSet::new(c.gamma2.clone()).general_position()
        && verify_drawing(&g2_drawing).map(|d| d.is_clean()).unwrap_or(false);
    r.record("gamma2 is a planar drawing in general position", gamma2_ok);

    let verts = &c.gamma1_sub.vertices;
    let sorted = verts.windows(2).all(|w| w[0] < w[1]) && verts.iter().all(|&v| v < n1);
    if !r.record("drawn vertex set is a sorted subset of G1", sorted && *verts == c.v_prime) {
        return r;
    }
    r.record("achieved bound matches", c.achieved_bound == verts.len());
    r.record("V' is outerplane in G1", is_outerplane(&g1, verts).unwrap_or(false));
    let sub = match induced_subgraph(&g1, verts) {
        Ok(s) => s,
        Err(_) => {
            r.record("G1[V'] can be formed", false);
            return r;
        }
    };
    let sub_drawing =
        StraightLineDrawing { graph: sub.graph.clone(), placement: c.gamma1_sub.points.clone() };
    let gamma1_ok = c.gamma1_sub.points.len() == verts.len()
        && PointSet::new(c.gamma1_sub.points.clone()).general_position()
        && verify_drawing(&sub_drawing).map(|d| d.is_clean()).unwrap_or(false);
    r.record("gamma1 restricted to V' is a planar drawing in general position", gamma1_ok);

    let point_of: HashMap<usize, Point> =
        verts.iter().copied().zip(c.gamma1_sub.points.iter().copied()).collect();
    let injective = c.mapping.iter().collect::<BTreeSet<_>>().len() == c.mapping.len();
    let mapping_ok = c.mapping.len() == n2
        && injective
        && c.mapping.iter().enumerate().all(|(x, m)| {
            point_of.get(m).copied() == c.gamma2.get(x).copied()
        });
    r.record("mapping sends each G2 vertex to a V' vertex on the same point", mapping_ok);

    if mapping_ok {
        let mut expected: Vec<SharedEdge> = g2
            .edges()
            .into_iter()
            .filter(|&(a, b)| g1.has_edge(c.mapping[a], c.mapping[b]))
            .map(|(a, b)| SharedEdge { g2: (a, b), g1: (c.mapping[a], c.mapping[b]) })
            .collect();
        expected.sort();
        let drawn_same = c.shared_edges.iter().all(|e| {
            let (p, q) = (c.gamma2[e.g2.0], c.gamma2[e.g2.1]);
            let (s, t) = (point_of[&e.g1.0], point_of[&e.g1.1]);
            (p, q) == (s, t) || (p, q) == (t, s)
        });
        r.record("shared edges are complete and drawn identically", expected == c.shared_edges && drawn_same);
    }

    let same_graph = ext.vertex_count() == n1 && ext.edges() == g1.edges();
    let restricted = induced_subgraph(&ext, verts).map(|s| s.graph.same_embedding(&sub.graph));
    r.record(
        "extension embeds G1 and restricts to the drawn embedding of G1[V']",
        same_graph && restricted.unwrap_or(false),
    );
    r
}
