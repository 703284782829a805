use std::cmp::Ordering;
use std::collections::HashSet;

use super::{PointSet, StraightLineDrawing};
use crate::error::{Error, Result};
use crate::geometry::{convex_hull_clockwise, cross, find_collinear_triple, orient, Point};
use crate::plane_graph::{
    connect_components, triangulate_faces, AugmentationRecord, DartIndex, PlaneGraph,
};

/// Completes an outerplane graph to a maximal outerplane graph on the same vertices.
/// Returns the adjacency and the outer cycle in clockwise order.
fn maximal_outerplane(h: &PlaneGraph) -> Result<(HashSet<(usize, usize)>, Vec<usize>)> {
    let n = h.vertex_count();
    let mut rot = h.rotations().to_vec();
    let mut record = AugmentationRecord::default();
    let outer = connect_components(&mut rot, h.placements(), &mut record)?;

    // A new vertex z joined to every vertex from inside the outer face.
    let z = n;
    rot.push(Vec::new());
    let darts = DartIndex::build(&rot).map_err(|e| Error::Invariant(format!("{e:?}")))?;
    let start = darts.dart(outer.0, outer.1).expect("outer dart");
    let mut walk = vec![start];
    loop {
        let d = darts.next_in_face(*walk.last().expect("nonempty"));
        if d == start {
            break;
        }
        walk.push(d);
    }
    let mut seen = vec![false; n];
    let mut first: Option<usize> = None;
    for &d in &walk {
        let (prev, v) = darts.pair(d);
        if seen[v] {
            continue;
        }
        seen[v] = true;
        let at = rot[v].iter().position(|&w| w == prev).expect("walk dart");
        rot[v].insert(at, z);
        match first {
            None => {
                rot[z].push(v);
                first = Some(v);
            }
            Some(f) => {
                let i = rot[z].iter().position(|&w| w == f).expect("first neighbor");
                rot[z].insert(i, v);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotOuterplane);
    }
    triangulate_faces(&mut rot, &mut record)?;

    let mut cycle: Vec<usize> = rot[z].iter().rev().copied().collect();
    let m = cycle.iter().enumerate().min_by_key(|&(_, &v)| v).map(|(i, _)| i).unwrap_or(0);
    cycle.rotate_left(m);
    let mut adj = HashSet::new();
    for (u, r) in rot.iter().enumerate().take(n) {
        for &v in r {
            if v != z {
                adj.insert((u, v));
            }
        }
    }
    Ok((adj, cycle))
}

/// Maps an outerplane graph onto a point set in general position with a planar
/// straight-line drawing that keeps its embedding.
///
/// The graph is completed to a triangulated polygon. Each step takes a polygon edge
/// `(u, v)` already on the point set, finds the triangle `u v w` on it, and picks the
/// point for `w` so that the remaining points split by the lines through that point
/// into the right counts for both sub-polygons.
pub fn embed_on_points(h: &PlaneGraph, p: &PointSet) -> Result<StraightLineDrawing> {
    let n = h.vertex_count();
    if p.len() != n {
        return Err(Error::PointCountMismatch { points: p.len(), vertices: n });
    }
    if let Some((a, b, c)) = find_collinear_triple(&p.points) {
        return Err(Error::NotGeneralPosition(a, b, c));
    }
    h.check()?;
    let all: Vec<usize> = (0..n).collect();
    if !crate::verification::is_outerplane(h, &all)? {
        return Err(Error::NotOuterplane);
    }
    if n <= 2 {
        return Ok(StraightLineDrawing { graph: h.clone(), placement: p.points.clone() });
    }

    let pts = &p.points;
    let (adj, c) = maximal_outerplane(h)?;
    let hull = convex_hull_clockwise(pts);
    let mut place = vec![Point::new(0, 0); n];
    let (pu, pv) = (hull[0], hull[1]);
    place[c[n - 1]] = pts[pu];
    place[c[0]] = pts[pv];
    let rest: Vec<usize> = (0..n).filter(|&i| i != pu && i != pv).collect();

    let mut stack: Vec<(usize, usize, Vec<usize>)> = vec![(0, n - 1, rest)];
    while let Some((a, b, free)) = stack.pop() {
        if b - a <= 1 {
            continue;
        }
        let (u, v) = (c[b], c[a]);
        let k = (a + 1..b)
            .find(|&k| adj.contains(&(c[k], u)) && adj.contains(&(c[k], v)))
            .ok_or_else(|| Error::Invariant("polygon edge without a triangle".into()))?;
        let (p_u, p_v) = (place[u], place[v]);
        if free.iter().any(|&i| orient(p_u, p_v, pts[i]) != Ordering::Less) {
            return Err(Error::Invariant("free point on the wrong side of a polygon edge".into()));
        }
        let k1 = b - k - 1;
        let k2 = k - a - 1;

        let mut by_u = free.clone();
        by_u.sort_by(|&x, &y| orient(p_u, pts[x], pts[y]));
        let q = *by_u[..=k2]
            .iter()
            .min_by(|&&x, &&y| orient(p_v, pts[x], pts[y]).reverse())
            .expect("at least one free point");
        let p_q = pts[q];
        place[c[k]] = p_q;

        let side_v_of_uq = orient(p_u, p_q, p_v);
        let side_u_of_vq = orient(p_v, p_q, p_u);
        let (mut ra, mut rb, mut rw) = (Vec::new(), Vec::new(), Vec::new());
        for &x in &free {
            if x == q {
                continue;
            }
            let beyond_u = orient(p_u, p_q, pts[x]) == side_v_of_uq.reverse();
            let beyond_v = orient(p_v, p_q, pts[x]) == side_u_of_vq.reverse();
            match (beyond_u, beyond_v) {
                (true, true) => rw.push(x),
                (true, false) => ra.push(x),
                (false, true) => rb.push(x),
                (false, false) => {
                    return Err(Error::Invariant("point inside the chosen triangle".into()))
                }
            }
        }
        if ra.len() > k1 || rb.len() > k2 {
            return Err(Error::Invariant("split counts exceed sub-polygon sizes".into()));
        }
        let d1 = Point::new(2 * p_q.x - p_v.x, 2 * p_q.y - p_v.y);
        let d2 = Point::new(2 * p_q.x - p_u.x, 2 * p_q.y - p_u.y);
        let s = cross(p_q, d1, d2).cmp(&0);
        rw.sort_by(|&x, &y| {
            let o = orient(p_q, pts[x], pts[y]);
            if o == s {
                Ordering::Less
            } else if o == s.reverse() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        });
        let take = k1 - ra.len();
        let mut s1 = ra;
        s1.extend_from_slice(&rw[..take]);
        let mut s2 = rb;
        s2.extend_from_slice(&rw[take..]);
        stack.push((k, b, s1));
        stack.push((a, k, s2));
    }
    Ok(StraightLineDrawing { graph: h.clone(), placement: place })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointset::verify_drawing;
    use crate::verification::{gen_random_outerplane, random_general_position};

    #[test]
    fn polygon_on_random_points() {
        for seed in 0..40 {
            let k = 3 + seed as usize % 20;
            let h = gen_random_outerplane(k, 0.9, seed).unwrap();
            let pts = PointSet::new(random_general_position(k, 1000, seed + 1));
            let d = embed_on_points(&h, &pts).unwrap();
            let r = verify_drawing(&d).unwrap();
            assert!(r.is_clean(), "seed {seed}: {r:?}");
            let mut used = d.placement.clone();
            used.sort();
            let mut given = pts.points.clone();
            given.sort();
            assert_eq!(used, given);
        }
    }

    #[test]
    fn collinear_points_rejected() {
        let h = gen_random_outerplane(3, 1.0, 0).unwrap();
        let pts = PointSet::new(vec![Point::new(0, 0), Point::new(1, 1), Point::new(2, 2)]);
        assert!(matches!(embed_on_points(&h, &pts), Err(Error::NotGeneralPosition(..))));
    }

    #[test]
    fn count_mismatch_rejected() {
        let h = gen_random_outerplane(4, 1.0, 0).unwrap();
        let pts = PointSet::new(random_general_position(3, 100, 0));
        assert!(matches!(embed_on_points(&h, &pts), Err(Error::PointCountMismatch { .. })));
    }
}
