//! Combinatorial plane graphs stored as clockwise rotation systems.
//!
//! Faces are traced with the rule: after the dart `(u, v)` comes `(v, w)` where `w`
//! immediately precedes `u` in the rotation of `v`. Every traced walk has its face on
//! the right, so internal faces come out clockwise and the outer face counterclockwise.
//!
//! A disconnected graph additionally records, per component, which walk faces outward
//! and which walk of another component encloses it.

mod darts;
mod delete;
mod faces;
mod io;
mod triangulate;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

pub(crate) use darts::DartIndex;
pub use delete::{delete_vertices, induced_subgraph, remove_edges, InducedPlaneGraph};
pub(crate) use faces::FaceStructure;
pub use faces::Face;
pub use io::{NestingEntry, PlaneGraphFile};
pub(crate) use triangulate::{connect_components, triangulate_faces};
pub use triangulate::{triangulate, AugmentationRecord};

use crate::error::{Error, Result};

/// Directed edge `(tail, head)`.
pub type Dart = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Text(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(i) => write!(f, "{i}"),
            Label::Text(s) => f.write_str(s),
        }
    }
}

/// Where one connected component sits.
///
/// `outer` is a dart on the walk of the component that faces away from it (`None` for
/// an isolated vertex). `inside` is a dart of the enclosing walk of another component,
/// or `None` when the component lies in the outer face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Placement {
    pub anchor: usize,
    pub outer: Option<Dart>,
    pub inside: Option<Dart>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Issue {
    NeighborOutOfRange { vertex: usize, neighbor: usize },
    SelfLoop(usize),
    RepeatedNeighbor { vertex: usize, neighbor: usize },
    Asymmetric { from: usize, to: usize },
    /// A component whose rotation system does not describe a sphere embedding.
    NonPlanarComponent { anchor: usize, euler: i64 },
    MissingPlacement(usize),
    DuplicatePlacement(usize),
    BadOuterDart(Placement),
    BadInsideDart(Placement),
    NestingCycle(usize),
    EulerMismatch { vertices: usize, edges: usize, faces: usize, components: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return f.write_str("valid");
        }
        let parts: Vec<String> = self.issues.iter().map(|i| format!("{i:?}")).collect();
        f.write_str(&parts.join("; "))
    }
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotations: Vec<Vec<usize>>,
    placements: Vec<Placement>,
    labels: Option<Vec<Label>>,
}

impl PlaneGraph {
    /// Builds a graph whose components all lie side by side in the outer face.
    ///
    /// The component holding `outer` faces outward along that dart. Every other
    /// component faces outward along the walk through the first dart of its smallest
    /// vertex.
    pub fn new(rotations: Vec<Vec<usize>>, outer: Option<Dart>) -> Self {
        let comps = loose_components(&rotations);
        let mut placements = Vec::with_capacity(comps.len());
        let mut outer_used = false;
        let comp_of_outer = outer.and_then(|(u, _)| comps.iter().position(|c| c.contains(&u)));
        for (ci, comp) in comps.iter().enumerate() {
            let anchor = comp[0];
            let dart = if comp_of_outer == Some(ci) {
                outer_used = true;
                outer
            } else {
                comp.iter()
                    .find_map(|&v| rotations[v].first().map(|&w| (v, w)))
            };
            placements.push(Placement { anchor, outer: dart, inside: None });
        }
        if !outer_used {
            if let Some(d) = outer {
                // Points at a vertex outside the graph; keep it so validation reports it.
                placements.push(Placement { anchor: d.0, outer: Some(d), inside: None });
            }
        }
        Self { rotations, placements, labels: None }
    }

    pub fn with_placements(rotations: Vec<Vec<usize>>, mut placements: Vec<Placement>) -> Self {
        placements.sort_by_key(|p| p.anchor);
        Self { rotations, placements, labels: None }
    }

    /// Builds a connected graph from its face cycles; face `outer` becomes the outer face.
    ///
    /// Each cycle lists vertices with the face on the right, so the cycles of internal
    /// faces are clockwise and the outer cycle is counterclockwise.
    pub fn from_faces(n: usize, faces: &[Vec<usize>], outer: usize) -> Result<Self> {
        let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for face in faces {
            let k = face.len();
            for i in 0..k {
                let (u, v, w) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
                if u >= n || v >= n || w >= n {
                    return Err(Error::VertexOutOfRange(u.max(v).max(w)));
                }
                // w immediately precedes u around v
                succ[v].push((w, u));
            }
        }
        let mut rotations = Vec::with_capacity(n);
        for (v, pairs) in succ.iter().enumerate() {
            if pairs.is_empty() {
                rotations.push(Vec::new());
                continue;
            }
            let start = pairs.iter().map(|p| p.0).min().unwrap_or(0);
            let mut rot = vec![start];
            let mut cur = start;
            loop {
                let next = pairs
                    .iter()
                    .find(|p| p.0 == cur)
                    .map(|p| p.1)
                    .ok_or_else(|| Error::Invariant(format!("open rotation at {v}")))?;
                if next == start {
                    break;
                }
                if rot.len() > pairs.len() {
                    return Err(Error::Invariant(format!("rotation at {v} does not close")));
                }
                rot.push(next);
                cur = next;
            }
            if rot.len() != pairs.len() {
                return Err(Error::Invariant(format!("vertex {v} is pinched")));
            }
            rotations.push(rot);
        }
        let f = faces
            .get(outer)
            .ok_or_else(|| Error::Invariant("outer face index out of range".into()))?;
        let dart = if f.len() >= 2 { Some((f[0], f[1])) } else { None };
        let g = Self::new(rotations, dart);
        g.check()?;
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Option<Vec<Label>>) -> Self {
        self.labels = labels;
        self
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotations.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotations[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotations
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rotations[u].contains(&v)
    }

    /// Undirected edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .rotations
            .iter()
            .enumerate()
            .flat_map(|(u, rot)| rot.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn placements(&self) -> &[Placement] {
        &self.placements
    }

    /// A dart on the outer face, if the outer face has any.
    pub fn outer_dart(&self) -> Option<Dart> {
        self.placements.iter().filter(|p| p.inside.is_none()).find_map(|p| p.outer)
    }

    /// Vertex sets of connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        loose_components(&self.rotations)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected, simple and with `3n - 6` edges.
    pub fn is_maximal(&self) -> bool {
        let n = self.vertex_count();
        n >= 3 && self.edge_count() == 3 * n - 6 && self.is_connected() && self.validate().is_valid()
    }

    pub fn validate(&self) -> ValidationReport {
        faces::analyze(self).0
    }

    pub(crate) fn check(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidGraph(report))
        }
    }

    pub(crate) fn face_structure(&self) -> Result<FaceStructure> {
        match faces::analyze(self) {
            (_, Some(fs)) => Ok(fs),
            (report, None) => Err(Error::InvalidGraph(report)),
        }
    }

    /// Faces ordered by their lexicographically smallest dart.
    pub fn trace_faces(&self) -> Result<Vec<Face>> {
        Ok(self.face_structure()?.faces)
    }

    /// Vertices incident to the outer face, sorted.
    pub fn outer_vertices(&self) -> Result<Vec<usize>> {
        let fs = self.face_structure()?;
        Ok(fs.vertices_on_face(fs.outer))
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.vertex_count();
        let mut rotations = vec![Vec::new(); n];
        for v in 0..n {
            rotations[perm[v]] = self.rotations[v].iter().map(|&w| perm[w]).collect();
        }
        let map = |d: Option<Dart>| d.map(|(a, b)| (perm[a], perm[b]));
        let placements = self
            .placements
            .iter()
            .map(|p| Placement { anchor: perm[p.anchor], outer: map(p.outer), inside: map(p.inside) })
            .collect::<Vec<_>>();
        let labels = self.labels.as_ref().map(|l| {
            let mut out = l.clone();
            for v in 0..n {
                out[perm[v]] = l[v].clone();
            }
            out
        });
        let mut g = Self::with_placements(rotations, placements);
        g.labels = labels;
        g.normalize_anchors();
        g
    }

    /// Same vertices, cyclic rotations and faces, including which face is outer.
    pub fn same_embedding(&self, other: &Self) -> bool {
        if self.vertex_count() != other.vertex_count() {
            return false;
        }
        for v in 0..self.vertex_count() {
            if !cyclic_eq(&self.rotations[v], &other.rotations[v]) {
                return false;
            }
        }
        match (self.trace_faces(), other.trace_faces()) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        }
    }

    /// Makes each placement anchor the smallest vertex of its component.
    pub(crate) fn normalize_anchors(&mut self) {
        let comps = loose_components(&self.rotations);
        let mut min_of = vec![usize::MAX; self.vertex_count()];
        for c in &comps {
            for &v in c {
                min_of[v] = c[0];
            }
        }
        for p in &mut self.placements {
            if let Some(&m) = min_of.get(p.anchor) {
                p.anchor = m;
            }
        }
        self.placements.sort_by_key(|p| p.anchor);
    }
}

pub(crate) fn cyclic_eq(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    match b.iter().position(|&x| x == a[0]) {
        None => false,
        Some(s) => (0..a.len()).all(|i| a[i] == b[(s + i) % b.len()]),
    }
}

/// Components of the underlying undirected graph; entries out of range are ignored.
pub(crate) fn loose_components(rotations: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = rotations.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, rot) in rotations.iter().enumerate() {
        for &v in rot {
            if v < n {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
