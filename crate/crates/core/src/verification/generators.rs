use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{orient, Point};
use crate::plane_graph::{remove_edges, PlaneGraph};

/// `shells` nested cycles of length 3 or 4, consecutive cycles joined by an antiprism
/// band. Vertex `len * k + j` is the `j`-th vertex of shell `k`, clockwise, shell 0
/// outermost. With length 4 the outermost square gets the chord `0-2` outside and the
/// innermost square the chord between its vertices 0 and 2.
pub fn gen_nested_cycles(shells: usize, len: usize) -> Result<PlaneGraph> {
    if shells == 0 || !(len == 3 || len == 4) {
        return Err(Error::Invariant(format!("unsupported nested cycles: {shells} x {len}")));
    }
    let v = |k: usize, j: usize| len * k + j % len;
    let mut faces: Vec<Vec<usize>> = Vec::new();
    if len == 3 {
        faces.push(vec![v(0, 0), v(0, 2), v(0, 1)]);
    } else {
        faces.push(vec![v(0, 0), v(0, 2), v(0, 1)]);
        faces.push(vec![v(0, 0), v(0, 3), v(0, 2)]);
    }
    for k in 0..shells - 1 {
        for j in 0..len {
            faces.push(vec![v(k, j), v(k, j + 1), v(k + 1, j)]);
            faces.push(vec![v(k + 1, j), v(k, j + 1), v(k + 1, j + 1)]);
        }
    }
    let s = shells - 1;
    if len == 3 {
        faces.push(vec![v(s, 0), v(s, 1), v(s, 2)]);
    } else {
        faces.push(vec![v(s, 0), v(s, 1), v(s, 2)]);
        faces.push(vec![v(s, 0), v(s, 2), v(s, 3)]);
    }
    PlaneGraph::from_faces(len * shells, &faces, 0)
}

/// Random maximal plane graph: repeated insertion into a uniformly random face,
/// followed by `2n` attempted flips of random internal edges.
pub fn gen_random_maximal(n: usize, seed: u64) -> Result<PlaneGraph> {
    if n < 3 {
        return Err(Error::TooFewVertices { needed: 3, found: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<[usize; 3]> = vec![[0, 2, 1], [0, 1, 2]];
    let outer = 0;
    for x in 3..n {
        let fi = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[fi];
        faces[fi] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
    }

    let mut face_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut adjacent: HashSet<(usize, usize)> = HashSet::new();
    for (fi, f) in faces.iter().enumerate() {
        for i in 0..3 {
            let (a, b) = (f[i], f[(i + 1) % 3]);
            face_of.insert((a, b), fi);
            adjacent.insert((a.min(b), a.max(b)));
        }
    }
    if n >= 4 {
        for _ in 0..2 * n {
            let fi = rng.gen_range(0..faces.len());
            if fi == outer {
                continue;
            }
            let i = rng.gen_range(0..3);
            let (a, b) = (faces[fi][i], faces[fi][(i + 1) % 3]);
            let gi = face_of[&(b, a)];
            if gi == outer {
                continue;
            }
            let c = faces[fi][(i + 2) % 3];
            let d = *faces[gi].iter().find(|&&x| x != a && x != b).expect("triangle");
            if c == d || adjacent.contains(&(c.min(d), c.max(d))) {
                continue;
            }
            adjacent.remove(&(a.min(b), a.max(b)));
            adjacent.insert((c.min(d), c.max(d)));
            face_of.remove(&(a, b));
            face_of.remove(&(b, a));
            faces[fi] = [c, a, d];
            faces[gi] = [d, b, c];
            for fj in [fi, gi] {
                let f = faces[fj];
                for k in 0..3 {
                    face_of.insert((f[k], f[(k + 1) % 3]), fj);
                }
            }
        }
    }
    let lists: Vec<Vec<usize>> = faces.iter().map(|f| f.to_vec()).collect();
    PlaneGraph::from_faces(n, &lists, outer)
}

/// Random planar graph: a random maximal plane graph with each edge kept with
/// probability `keep`.
pub fn gen_random_planar(n: usize, keep: f64, seed: u64) -> Result<PlaneGraph> {
    if n < 3 {
        let rot = match n {
            2 => vec![vec![1], vec![0]],
            _ => vec![vec![]; n],
        };
        let outer = (n == 2).then_some((0, 1));
        return Ok(PlaneGraph::new(rot, outer));
    }
    let g = gen_random_maximal(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let drop: Vec<(usize, usize)> = g.edges().into_iter().filter(|_| !rng.gen_bool(keep)).collect();
    remove_edges(&g, &drop)
}

/// Random outerplane graph on `k` vertices: a randomly triangulated polygon with
/// each chord and side kept with probability `keep`, then randomly relabeled.
pub fn gen_random_outerplane(k: usize, keep: f64, seed: u64) -> Result<PlaneGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = match k {
        0 => PlaneGraph::new(vec![], None),
        1 => PlaneGraph::new(vec![vec![]], None),
        2 => PlaneGraph::new(vec![vec![1], vec![0]], Some((0, 1))),
        _ => {
            let mut faces: Vec<Vec<usize>> = vec![(0..k).rev().collect()];
            let mut stack = vec![(0..k).collect::<Vec<usize>>()];
            while let Some(poly) = stack.pop() {
                if poly.len() == 3 {
                    faces.push(poly);
                    continue;
                }
                let m = poly.len();
                let i = rng.gen_range(0..m);
                let j = (i + rng.gen_range(2..m - 1)) % m;
                let (lo, hi) = (i.min(j), i.max(j));
                stack.push(poly[lo..=hi].to_vec());
                let mut rest = poly[hi..].to_vec();
                rest.extend_from_slice(&poly[..=lo]);
                stack.push(rest);
            }
            PlaneGraph::from_faces(k, &faces, 0)?
        }
    };
    let drop: Vec<(usize, usize)> = g.edges().into_iter().filter(|_| !rng.gen_bool(keep)).collect();
    let g = remove_edges(&g, &drop)?;
    let perm = random_permutation(k, &mut rng);
    Ok(g.relabel(&perm))
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// `k` integer points in `[0, range)^2` with no three collinear.
pub fn random_general_position(k: usize, range: i64, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Point> = Vec::with_capacity(k);
    while pts.len() < k {
        let p = Point::new(rng.gen_range(0..range), rng.gen_range(0..range));
        if pts.contains(&p) {
            continue;
        }
        let clash = (0..pts.len())
            .any(|i| (i + 1..pts.len()).any(|j| orient(pts[i], pts[j], p) == std::cmp::Ordering::Equal));
        if !clash {
            pts.push(p);
        }
    }
    pts
}
