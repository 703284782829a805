//! Straight-line drawings: exact verification, a grid drawing in general position, and
//! embedding outerplane graphs on arbitrary point sets.

mod grid;
mod outerplane;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

pub use grid::{canonical_order, draw_general_position};
pub use outerplane::embed_on_points;

use crate::error::Result;
use crate::geometry::{
    clockwise_order, find_collinear_triple, on_segment, orient, overlap_at_shared_endpoint,
    segments_intersect, signed_area2, winding_number, Point,
};
use crate::plane_graph::{cyclic_eq, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSet {
    pub points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Self {
        Self { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// No two points coincide and no three are collinear.
    pub fn general_position(&self) -> bool {
        find_collinear_triple(&self.points).is_none()
    }
}

#[derive(Debug, Clone)]
pub struct StraightLineDrawing {
    pub graph: PlaneGraph,
    pub placement: Vec<Point>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct DrawingReport {
    pub missing_points: bool,
    pub coincident: Vec<(usize, usize)>,
    pub crossings: Vec<((usize, usize), (usize, usize))>,
    pub vertex_on_edge: Vec<(usize, (usize, usize))>,
    pub rotation_mismatch: Vec<usize>,
    pub outer_face_mismatch: Vec<usize>,
    pub nesting_mismatch: Vec<usize>,
}

impl DrawingReport {
    pub fn is_clean(&self) -> bool {
        *self == Self::default()
    }
}

/// Checks that the drawing is planar and realizes the combinatorial embedding:
/// clockwise order at every vertex, the outer walk of each component, and which
/// walk each component is nested in.
pub fn verify_drawing(d: &StraightLineDrawing) -> Result<DrawingReport> {
    let g = &d.graph;
    let pos = &d.placement;
    let n = g.vertex_count();
    let mut r = DrawingReport::default();
    if pos.len() != n {
        r.missing_points = true;
        return Ok(r);
    }
    let fs = g.face_structure()?;

    let mut seen: HashMap<Point, usize> = HashMap::new();
    for (v, p) in pos.iter().enumerate() {
        if let Some(&u) = seen.get(p) {
            r.coincident.push((u, v));
        } else {
            seen.insert(*p, v);
        }
    }
    if !r.coincident.is_empty() {
        return Ok(r);
    }

    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, e) in &edges[i + 1..] {
            let shared = [a, b].iter().find(|x| **x == c || **x == e).copied();
            let bad = match shared {
                Some(s) => {
                    let o1 = if a == s { b } else { a };
                    let o2 = if c == s { e } else { c };
                    overlap_at_shared_endpoint(pos[s], pos[o1], pos[o2])
                }
                None => segments_intersect(pos[a], pos[b], pos[c], pos[e]),
            };
            if bad {
                r.crossings.push(((a, b), (c, e)));
            }
        }
        for v in 0..n {
            if v != a && v != b && on_segment(pos[v], pos[a], pos[b]) {
                r.vertex_on_edge.push((v, (a, b)));
            }
        }
    }
    if !r.crossings.is_empty() || !r.vertex_on_edge.is_empty() {
        return Ok(r);
    }

    for v in 0..n {
        let rot = g.rotation(v);
        if rot.len() < 3 {
            continue;
        }
        let targets: Vec<(usize, Point)> = rot.iter().map(|&w| (w, pos[w])).collect();
        if !cyclic_eq(&clockwise_order(pos[v], &targets), rot) {
            r.rotation_mismatch.push(v);
        }
    }

    // Outer walk of each component: the walk through the lowest vertex that leaves it
    // first counterclockwise from straight down.
    let lowest = |comp: &[usize]| -> usize {
        *comp.iter().min_by_key(|&&v| (pos[v].y, pos[v].x)).expect("nonempty component")
    };
    let mut outer_walk_of_comp: Vec<Option<usize>> = vec![None; fs.components.len()];
    for p in g.placements() {
        let c = fs.component_of[p.anchor];
        let Some((a, b)) = p.outer else { continue };
        let expected = fs.walk_of[fs.darts.dart(a, b).expect("valid graph")];
        outer_walk_of_comp[c] = Some(expected);
        let v = lowest(&fs.components[c]);
        let down = Point::new(pos[v].x, pos[v].y - 1);
        let first = g
            .rotation(v)
            .iter()
            .copied()
            .min_by(|&x, &y| ccw_from(pos[v], down, pos[x], pos[y]))
            .expect("component has edges");
        let found = fs.walk_of[fs.darts.dart(v, first).expect("edge")];
        if found != expected {
            r.outer_face_mismatch.push(fs.components[c][0]);
        }
    }

    let polygons: Vec<(usize, Vec<Point>, i128)> = fs
        .walks
        .iter()
        .enumerate()
        .filter(|&(wi, _)| !outer_walk_of_comp.contains(&Some(wi)))
        .map(|(wi, w)| {
            let poly: Vec<Point> = w.iter().map(|&dd| pos[fs.darts.tail(dd)]).collect();
            let area = signed_area2(&poly).abs();
            (wi, poly, area)
        })
        .collect();
    for p in g.placements() {
        let c = fs.component_of[p.anchor];
        let probe = pos[lowest(&fs.components[c])];
        let enclosing = polygons
            .iter()
            .filter(|(wi, _, _)| fs.component_of[fs.darts.tail(fs.walks[*wi][0])] != c)
            .filter(|(_, poly, _)| winding_number(probe, poly) != 0)
            .min_by_key(|(_, _, area)| *area)
            .map(|(wi, _, _)| *wi);
        let expected = p.inside.map(|(a, b)| fs.walk_of[fs.darts.dart(a, b).expect("valid graph")]);
        if enclosing != expected {
            r.nesting_mismatch.push(fs.components[c][0]);
        }
    }
    Ok(r)
}

/// Orders `x` before `y` when `x` comes first turning counterclockwise from the ray
/// `center -> reference`.
fn ccw_from(center: Point, reference: Point, x: Point, y: Point) -> std::cmp::Ordering {
    use std::cmp::Ordering::*;
    let half = |p: Point| -> u8 {
        match orient(center, reference, p) {
            Greater => 0,
            Less => 1,
            Equal => {
                let same_dir = (p.x - center.x) as i128 * (reference.x - center.x) as i128
                    + (p.y - center.y) as i128 * (reference.y - center.y) as i128
                    > 0;
                if same_dir {
                    0
                } else {
                    1
                }
            }
        }
    };
    half(x).cmp(&half(y)).then_with(|| orient(center, y, x))
}
