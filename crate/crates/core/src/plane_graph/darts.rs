use std::collections::HashMap;

use super::{Dart, Issue};

/// Flat numbering of darts: the darts leaving `u` occupy `offset[u]..offset[u + 1]`
/// in rotation order.
#[derive(Debug, Clone)]
pub(crate) struct DartIndex {
    offset: Vec<usize>,
    head: Vec<usize>,
    tail: Vec<usize>,
    twin: Vec<usize>,
}

impl DartIndex {
    /// Fails with the list of structural issues if the rotations are not a simple
    /// symmetric graph.
    pub fn build(rotations: &[Vec<usize>]) -> Result<Self, Vec<Issue>> {
        let n = rotations.len();
        let mut issues = Vec::new();
        let mut offset = Vec::with_capacity(n + 1);
        let mut head = Vec::new();
        let mut tail = Vec::new();
        let mut pos: HashMap<(usize, usize), usize> = HashMap::new();
        for (u, rot) in rotations.iter().enumerate() {
            offset.push(head.len());
            for &v in rot {
                if v >= n {
                    issues.push(Issue::NeighborOutOfRange { vertex: u, neighbor: v });
                    continue;
                }
                if v == u {
                    issues.push(Issue::SelfLoop(u));
                    continue;
                }
                if pos.insert((u, v), head.len()).is_some() {
                    issues.push(Issue::RepeatedNeighbor { vertex: u, neighbor: v });
                    continue;
                }
                head.push(v);
                tail.push(u);
            }
        }
        offset.push(head.len());
        let mut twin = Vec::with_capacity(head.len());
        for d in 0..head.len() {
            match pos.get(&(head[d], tail[d])) {
                Some(&t) => twin.push(t),
                None => {
                    issues.push(Issue::Asymmetric { from: tail[d], to: head[d] });
                    twin.push(usize::MAX);
                }
            }
        }
        if issues.is_empty() {
            Ok(Self { offset, head, tail, twin })
        } else {
            Err(issues)
        }
    }

    pub fn len(&self) -> usize {
        self.head.len()
    }

    pub fn tail(&self, d: usize) -> usize {
        self.tail[d]
    }

    pub fn pair(&self, d: usize) -> Dart {
        (self.tail[d], self.head[d])
    }

    pub fn twin(&self, d: usize) -> usize {
        self.twin[d]
    }

    pub fn out_darts(&self, v: usize) -> std::ops::Range<usize> {
        self.offset[v]..self.offset[v + 1]
    }

    pub fn dart(&self, u: usize, v: usize) -> Option<usize> {
        if u + 1 >= self.offset.len() {
            return None;
        }
        self.out_darts(u).find(|&d| self.head[d] == v)
    }

    pub fn next_in_face(&self, d: usize) -> usize {
        let t = self.twin[d];
        let v = self.head[d];
        let base = self.offset[v];
        let deg = self.offset[v + 1] - base;
        base + (t - base + deg - 1) % deg
    }

    /// All closed walks, each rotated to start at its smallest dart, sorted by that dart.
    pub fn walks(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut walks = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                walk.push(d);
                d = self.next_in_face(d);
            }
            let (min_i, _) = walk
                .iter()
                .enumerate()
                .min_by_key(|&(_, &d)| self.pair(d))
                .expect("walks are nonempty");
            walk.rotate_left(min_i);
            walks.push(walk);
        }
        walks.sort_by_key(|w| self.pair(w[0]));
        walks
    }
}
