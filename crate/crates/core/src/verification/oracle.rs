use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane_graph::PlaneGraph;
use crate::union_find::UnionFind;

pub const DEFAULT_ORACLE_CAP: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleMode {
    Outerplane,
    StronglyOuterplane,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub max_size: usize,
    pub witness: Vec<usize>,
    pub explored: u64,
}

/// Tests vertex subsets of a fixed plane graph given as bitmasks.
///
/// Host faces are merged across every edge losing an endpoint; a subset is outerplane
/// when each kept vertex has a corner in the class of the outer face.
#[derive(Debug, Clone)]
pub struct SubsetChecker {
    n: usize,
    faces: usize,
    outer: usize,
    edges: Vec<(usize, usize, usize, usize)>,
    corners: Vec<Vec<usize>>,
}

impl SubsetChecker {
    pub fn new(g: &PlaneGraph) -> Result<Self> {
        let fs = g.face_structure()?;
        let mut edges = Vec::new();
        for d in 0..fs.darts.len() {
            let (u, v) = fs.darts.pair(d);
            if u < v {
                edges.push((u, v, fs.dart_face(d), fs.dart_face(fs.darts.twin(d))));
            }
        }
        let corners = (0..g.vertex_count())
            .map(|v| {
                let mut c = fs.vertex_faces(v);
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        Ok(Self { n: g.vertex_count(), faces: fs.faces.len(), outer: fs.outer, edges, corners })
    }

    pub(crate) fn check(&self, mask: u64, mode: OracleMode, uf: &mut UnionFind) -> bool {
        uf.reset();
        let inside = |v: usize| mask >> v & 1 == 1;
        for &(u, v, f, g) in &self.edges {
            if !(inside(u) && inside(v)) {
                uf.union(f, g);
            }
        }
        let outer = uf.find(self.outer);
        for v in 0..self.n {
            if inside(v) {
                if !self.corners[v].iter().any(|&f| uf.find(f) == outer) {
                    return false;
                }
            } else if mode == OracleMode::StronglyOuterplane && uf.find(self.corners[v][0]) != outer {
                return false;
            }
        }
        true
    }

    pub fn check_set(&self, subset: &[usize], mode: OracleMode) -> bool {
        let mask = subset.iter().fold(0u64, |m, &v| m | 1 << v);
        self.check(mask, mode, &mut UnionFind::new(self.faces))
    }
}

fn next_same_popcount(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Largest subset inducing an (strongly) outerplane subgraph, by trying sizes from
/// `n` downward.
pub fn brute_force_max(g: &PlaneGraph, mode: OracleMode, cap: usize) -> Result<OracleResult> {
    let n = g.vertex_count();
    if n > cap || n > 63 {
        return Err(Error::OracleCapExceeded { n, cap: cap.min(63) });
    }
    let checker = SubsetChecker::new(g)?;
    let mut uf = UnionFind::new(checker.faces);
    let mut explored = 0u64;
    for k in (0..=n).rev() {
        let limit = 1u64 << n;
        let mut x = if k == 0 { 0 } else { (1u64 << k) - 1 };
        loop {
            explored += 1;
            if checker.check(x, mode, &mut uf) {
                let witness = (0..n).filter(|&v| x >> v & 1 == 1).collect();
                return Ok(OracleResult { max_size: k, witness, explored });
            }
            if k == 0 {
                break;
            }
            x = next_same_popcount(x);
            if x >= limit {
                break;
            }
        }
    }
    Err(Error::Invariant("the empty set is always outerplane".into()))
}

/// Maximum independent set when `n <= exact_cap`, otherwise a min-degree greedy one.
pub fn independent_set_baseline(g: &PlaneGraph, exact_cap: usize) -> Vec<usize> {
    let n = g.vertex_count();
    if n <= exact_cap.min(63) {
        let adj: Vec<u64> =
            (0..n).map(|v| g.rotation(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
        let mut best = 0u64;
        mis(&adj, if n == 64 { u64::MAX } else { (1u64 << n) - 1 }, 0, &mut best);
        return (0..n).filter(|&v| best >> v & 1 == 1).collect();
    }
    let mut alive = vec![true; n];
    let mut out = Vec::new();
    loop {
        let deg = |v: usize| g.rotation(v).iter().filter(|&&w| alive[w]).count();
        let Some(v) = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (deg(v), v)) else { break };
        out.push(v);
        alive[v] = false;
        for &w in g.rotation(v) {
            alive[w] = false;
        }
    }
    out.sort_unstable();
    out
}

fn mis(adj: &[u64], candidates: u64, chosen: u64, best: &mut u64) {
    if candidates == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    let v = candidates.trailing_zeros() as usize;
    let bit = 1u64 << v;
    mis(adj, candidates & !bit & !adj[v], chosen | bit, best);
    if adj[v] & candidates != 0 {
        mis(adj, candidates & !bit, chosen, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verification::gen_nested_cycles;

    #[test]
    fn gosper_walks_all_subsets() {
        let mut x = 0b0111u64;
        let mut count = 1;
        loop {
            x = next_same_popcount(x);
            if x >= 1 << 6 {
                break;
            }
            count += 1;
        }
        assert_eq!(count, 20);
    }

    #[test]
    fn triangle_is_fully_outerplane() {
        let g = gen_nested_cycles(1, 3).unwrap();
        let r = brute_force_max(&g, OracleMode::Outerplane, 18).unwrap();
        assert_eq!(r.max_size, 3);
    }

    #[test]
    fn cap_is_enforced() {
        let g = gen_nested_cycles(7, 3).unwrap();
        assert!(matches!(
            brute_force_max(&g, OracleMode::Outerplane, 18),
            Err(Error::OracleCapExceeded { .. })
        ));
    }

    #[test]
    fn octahedron_independent_set() {
        let g = gen_nested_cycles(2, 3).unwrap();
        assert_eq!(independent_set_baseline(&g, 20).len(), 2);
    }
}
