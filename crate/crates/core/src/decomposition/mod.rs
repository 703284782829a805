//! Peeling a maximal plane graph into outerplane levels.
//!
//! Level `V_1` is the outer face of `G`; level `V_{i+1}` is the outer face of what
//! remains after removing `V_1, ..., V_i`. A component of the remainder at level `i` is
//! `H*_{i,j}`; its level-`i` vertices induce the outerplane graph `H_{i,j}`.

mod bctree;

use serde::Serialize;

pub use bctree::{block_cut_tree, contract_bc_tree, Block, BlockCutTree, BuNode, ContractedBcTree};
pub(crate) use bctree::block_cut_tree_of;

use crate::error::{Error, Result};
use crate::plane_graph::{delete_vertices, induced_subgraph, Dart, PlaneGraph};

/// An internal face of `H_{i,j}`, traced clockwise from its smallest dart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryFace {
    pub id: Dart,
    pub cycle: Vec<usize>,
    /// Index of the next-level component lying inside this face.
    pub inner: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelComponent {
    /// Vertex set of `H*_{i,j}`, sorted.
    pub vertices: Vec<usize>,
    /// Vertex set of `H_{i,j}`, sorted.
    pub boundary: Vec<usize>,
    pub faces: Vec<BoundaryFace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OuterplaneDecomposition {
    /// `levels[i]` holds the vertices of level `i + 1`, sorted.
    pub levels: Vec<Vec<usize>>,
    /// `components[i][j]` is `H*_{i+1,j}`, ordered by smallest vertex.
    pub components: Vec<Vec<LevelComponent>>,
    /// Zero-based level of each vertex.
    pub level_of: Vec<usize>,
    /// Index within its level of the component holding each vertex.
    pub component_of: Vec<usize>,
}

impl OuterplaneDecomposition {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn component(&self, level: usize, index: usize) -> &LevelComponent {
        &self.components[level][index]
    }
}

pub fn peel(g: &PlaneGraph) -> Result<OuterplaneDecomposition> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::TooFewVertices { needed: 3, found: n });
    }
    if !g.is_maximal() {
        return Err(Error::NotMaximal);
    }

    let mut removed: Vec<usize> = Vec::new();
    let mut levels = Vec::new();
    let mut comps_by_level: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut level_of = vec![usize::MAX; n];
    let mut component_of = vec![usize::MAX; n];
    while removed.len() < n {
        let rest = delete_vertices(g, &removed)?;
        let outer = rest.outer_vertices_in_host()?;
        let comps: Vec<Vec<usize>> = rest
            .graph
            .components()
            .into_iter()
            .map(|c| c.into_iter().map(|v| rest.to_host[v]).collect())
            .collect();
        let li = levels.len();
        for &v in &outer {
            level_of[v] = li;
        }
        for (j, c) in comps.iter().enumerate() {
            for &v in c {
                if level_of[v] == li {
                    component_of[v] = j;
                }
            }
        }
        removed.extend(outer.iter().copied());
        levels.push(outer);
        comps_by_level.push(comps);
    }

    let mut components: Vec<Vec<LevelComponent>> = Vec::with_capacity(levels.len());
    for (li, comps) in comps_by_level.iter().enumerate() {
        let mut out = Vec::with_capacity(comps.len());
        for c in comps {
            let boundary: Vec<usize> = c.iter().copied().filter(|&v| level_of[v] == li).collect();
            let h = induced_subgraph(g, &boundary)?;
            let fs = h.graph.face_structure()?;
            let mut faces: Vec<(usize, BoundaryFace)> = fs
                .faces
                .iter()
                .filter(|f| !f.is_outer)
                .map(|f| {
                    let walk: Vec<usize> = f.boundary().iter().map(|d| h.to_host[d.0]).collect();
                    let k = walk.len();
                    let start = (0..k)
                        .min_by_key(|&i| (walk[i], walk[(i + 1) % k]))
                        .expect("nonempty face");
                    let cycle: Vec<usize> = (0..k).map(|i| walk[(start + i) % k]).collect();
                    let id = (cycle[0], cycle[1 % k]);
                    (f.id, BoundaryFace { id, cycle, inner: None })
                })
                .collect();
            faces.sort_by_key(|(_, f)| f.id);
            if let Some(next) = comps_by_level.get(li + 1) {
                for (k, inner) in next.iter().enumerate() {
                    if !c.contains(&inner[0]) {
                        continue;
                    }
                    let face_id = h.assignment[&inner[0]];
                    let slot = faces
                        .iter_mut()
                        .find(|(fid, _)| *fid == face_id)
                        .ok_or_else(|| Error::Invariant("inner component in the outer face".into()))?;
                    if slot.1.inner.replace(k).is_some() {
                        return Err(Error::Invariant("two components inside one face".into()));
                    }
                }
            }
            for f in &faces {
                if f.1.cycle.len() < 3 || {
                    let mut s = f.1.cycle.clone();
                    s.sort_unstable();
                    s.dedup();
                    s.len() != f.1.cycle.len()
                } {
                    return Err(Error::Invariant("internal face of a level is not a simple cycle".into()));
                }
            }
            out.push(LevelComponent {
                vertices: c.clone(),
                boundary,
                faces: faces.into_iter().map(|(_, f)| f).collect(),
            });
        }
        components.push(out);
    }

    Ok(OuterplaneDecomposition { levels, components, level_of, component_of })
}
