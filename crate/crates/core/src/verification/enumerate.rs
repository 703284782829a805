use std::collections::{BTreeSet, VecDeque};

use crate::error::Result;
use crate::plane_graph::PlaneGraph;

/// Smallest breadth-first code over all starting darts; equal codes mean an
/// orientation-preserving isomorphism of the rotation systems.
pub fn canonical_code(rot: &[Vec<usize>]) -> Vec<usize> {
    let n = rot.len();
    let mut best: Option<Vec<usize>> = None;
    for u in 0..n {
        for &v in &rot[u] {
            let mut num = vec![usize::MAX; n];
            let mut reference = vec![usize::MAX; n];
            let mut order = vec![u];
            num[u] = 0;
            reference[u] = v;
            let mut code = Vec::with_capacity(3 * n);
            let mut i = 0;
            while i < order.len() {
                let x = order[i];
                let deg = rot[x].len();
                let start = rot[x].iter().position(|&w| w == reference[x]).unwrap_or(0);
                for t in 0..deg {
                    let w = rot[x][(start + t) % deg];
                    if num[w] == usize::MAX {
                        num[w] = order.len();
                        reference[w] = x;
                        order.push(w);
                    }
                    code.push(num[w]);
                }
                code.push(usize::MAX);
                i += 1;
            }
            if best.as_ref().map_or(true, |b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.unwrap_or_default()
}

fn flip(rot: &[Vec<usize>], a: usize, b: usize) -> Option<Vec<Vec<usize>>> {
    let pred = |x: usize, y: usize| {
        let r = &rot[x];
        let i = r.iter().position(|&w| w == y).expect("neighbor");
        r[(i + r.len() - 1) % r.len()]
    };
    let c = pred(b, a);
    let d = pred(a, b);
    if c == d || rot[c].contains(&d) {
        return None;
    }
    let mut out = rot.to_vec();
    out[a].retain(|&w| w != b);
    out[b].retain(|&w| w != a);
    let i = out[c].iter().position(|&w| w == b).expect("c sees b");
    out[c].insert(i, d);
    let j = out[d].iter().position(|&w| w == a).expect("d sees a");
    out[d].insert(j, c);
    Some(out)
}

/// One rotation system per orientation-preserving isomorphism class of triangulations
/// of the sphere on `n >= 3` vertices, found as the flip closure of a stacked one.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    let mut faces: Vec<Vec<usize>> = vec![vec![0, 2, 1], vec![0, 1, 2]];
    for x in 3..n {
        let f = faces.pop().expect("faces");
        let (a, b, c) = (f[0], f[1], f[2]);
        faces.push(vec![b, c, x]);
        faces.push(vec![c, a, x]);
        faces.push(vec![a, b, x]);
    }
    let start = PlaneGraph::from_faces(n.max(3), &faces, 0)?.rotations().to_vec();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([start]);
    while let Some(rot) = queue.pop_front() {
        if !seen.insert(canonical_code(&rot)) {
            continue;
        }
        for a in 0..n {
            for &b in &rot[a] {
                if a < b {
                    if let Some(next) = flip(&rot, a, b) {
                        queue.push_back(next);
                    }
                }
            }
        }
        out.push(rot);
    }
    Ok(out)
}

/// Every triangulation on `n` vertices with every choice of outer face.
pub fn enumerate_maximal(n: usize) -> Result<Vec<PlaneGraph>> {
    let mut out = Vec::new();
    for rot in enumerate_triangulations(n)? {
        let g = PlaneGraph::new(rot.clone(), None);
        for f in g.trace_faces()? {
            let d = f.boundary()[0];
            out.push(PlaneGraph::new(rot.clone(), Some(d)));
        }
    }
    Ok(out)
}
