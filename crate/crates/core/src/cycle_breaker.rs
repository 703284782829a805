//! Two-coloring of the levels of a peeled triangulation.
//!
//! Components are colored bottom-up. For each internal face `f` of a level boundary a
//! set `B_f` of cycle vertices is chosen so that the white vertices inside `f` together
//! with the white vertices of the cycle stay outerplane with every black vertex on the
//! outer face. Boundary vertices in no `B_f` are white.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::decomposition::{
    block_cut_tree_of, contract_bc_tree, peel, ContractedBcTree, OuterplaneDecomposition,
};
use crate::error::{Error, Result};
use crate::plane_graph::{induced_subgraph, triangulate, AugmentationRecord, Dart, PlaneGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

/// Which counting condition a BU-node meets, with `s = |W| - |B|` over the node and
/// `w` the number of white vertices on its outer walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `s >= w + 1`.
    ExcessWhite,
    /// `s = w` and two white vertices are consecutive on the outer walk.
    WhiteOuterEdge,
    /// The node is a single white vertex.
    LoneWhite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BuRecord {
    pub level: usize,
    pub component: usize,
    pub node: usize,
    pub vertices: Vec<usize>,
    pub white: Vec<usize>,
    /// Outer walk of the node in clockwise order.
    pub outer_walk: Vec<usize>,
    pub surplus: i64,
    pub outer_white: usize,
    /// Smallest pair `(v, v')` of white vertices with `v'` clockwise after `v`.
    pub white_edge: Option<(usize, usize)>,
    pub condition: Option<Condition>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceClass {
    Empty,
    Trivial,
    NonTrivial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceRecord {
    pub level: usize,
    pub component: usize,
    pub face: Dart,
    pub class: FaceClass,
    pub black: Vec<usize>,
    /// Surplus of the component inside the face, when there is one.
    pub inner_surplus: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoColoring {
    pub colors: Vec<Option<Color>>,
    pub faces: Vec<FaceRecord>,
    pub nodes: Vec<BuRecord>,
}

impl TwoColoring {
    pub fn white(&self) -> Vec<usize> {
        self.with_color(Color::White)
    }

    pub fn black(&self) -> Vec<usize> {
        self.with_color(Color::Black)
    }

    fn with_color(&self, c: Color) -> Vec<usize> {
        (0..self.colors.len()).filter(|&v| self.colors[v] == Some(c)).collect()
    }

    pub fn surplus(&self) -> i64 {
        self.white().len() as i64 - self.black().len() as i64
    }
}

/// Result of running the whole extraction on a plane graph.
#[derive(Debug, Clone)]
pub struct Extraction {
    pub v_prime: Vec<usize>,
    pub triangulated: Option<PlaneGraph>,
    pub augmentation: Option<AugmentationRecord>,
    pub decomposition: Option<OuterplaneDecomposition>,
    pub coloring: Option<TwoColoring>,
}

/// Finds at least `n / 2` vertices inducing a strongly outerplane subgraph of `g`.
pub fn extract_outerplane_set(g: &PlaneGraph) -> Result<Extraction> {
    g.check()?;
    let n = g.vertex_count();
    if n < 3 {
        return Ok(Extraction {
            v_prime: (0..n).collect(),
            triangulated: None,
            augmentation: None,
            decomposition: None,
            coloring: None,
        });
    }
    let (t, record) = triangulate(g)?;
    let d = peel(&t)?;
    let coloring = color_decomposition(&t, &d)?;
    Ok(Extraction {
        v_prime: coloring.white(),
        triangulated: Some(t),
        augmentation: Some(record),
        decomposition: Some(d),
        coloring: Some(coloring),
    })
}

/// Colors every vertex of a peeled maximal plane graph.
pub fn color_decomposition(g: &PlaneGraph, d: &OuterplaneDecomposition) -> Result<TwoColoring> {
    let mut c = Colorer::new(g, d);
    for j in 0..d.components[0].len() {
        c.color(0, j)?;
    }
    Ok(c.finish())
}

/// Colors `H*_{level, index}` and everything nested inside it; other vertices stay `None`.
pub fn color_component(
    g: &PlaneGraph,
    d: &OuterplaneDecomposition,
    level: usize,
    index: usize,
) -> Result<TwoColoring> {
    let mut c = Colorer::new(g, d);
    c.color(level, index)?;
    Ok(c.finish())
}

struct Colorer<'a> {
    g: &'a PlaneGraph,
    d: &'a OuterplaneDecomposition,
    colors: Vec<Option<Color>>,
    faces: Vec<FaceRecord>,
    nodes: BTreeMap<(usize, usize), (ContractedBcTree, Vec<BuRecord>)>,
}

impl<'a> Colorer<'a> {
    fn new(g: &'a PlaneGraph, d: &'a OuterplaneDecomposition) -> Self {
        Self { g, d, colors: vec![None; g.vertex_count()], faces: vec![], nodes: BTreeMap::new() }
    }

    fn finish(self) -> TwoColoring {
        TwoColoring {
            colors: self.colors,
            faces: self.faces,
            nodes: self.nodes.into_values().flat_map(|(_, r)| r).collect(),
        }
    }

    fn surplus_of(&self, vertices: &[usize]) -> i64 {
        vertices
            .iter()
            .map(|&v| match self.colors[v] {
                Some(Color::White) => 1,
                Some(Color::Black) => -1,
                None => 0,
            })
            .sum()
    }

    fn color(&mut self, li: usize, j: usize) -> Result<()> {
        let comp = &self.d.components[li][j];
        for f in &comp.faces {
            if let Some(k) = f.inner {
                self.color(li + 1, k)?;
            }
        }

        let mut black_sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); comp.faces.len()];
        let mut classes = Vec::with_capacity(comp.faces.len());
        let mut trivial = Vec::new();
        for (fi, f) in comp.faces.iter().enumerate() {
            let class = match f.inner {
                None => FaceClass::Empty,
                Some(k) => {
                    let inner = &self.d.components[li + 1][k];
                    let lone_white =
                        inner.vertices.len() == 1 && self.colors[inner.vertices[0]] == Some(Color::White);
                    let all_black = inner.boundary.iter().all(|&v| self.colors[v] == Some(Color::Black));
                    if lone_white || all_black {
                        FaceClass::Trivial
                    } else {
                        FaceClass::NonTrivial
                    }
                }
            };
            if class == FaceClass::Trivial {
                trivial.push(fi);
            }
            classes.push(class);
        }

        let trivial_faces: Vec<(Dart, Vec<usize>)> =
            trivial.iter().map(|&fi| (comp.faces[fi].id, comp.faces[fi].cycle.clone())).collect();
        for (slot, (_, v)) in trivial.iter().zip(assign_trivial_faces(&trivial_faces)) {
            black_sets[*slot].insert(v);
        }

        let mut inner_surplus = vec![None; comp.faces.len()];
        for (fi, f) in comp.faces.iter().enumerate() {
            let Some(k) = f.inner else { continue };
            let inner = &self.d.components[li + 1][k];
            let s = self.surplus_of(&inner.vertices);
            inner_surplus[fi] = Some(s);
            if classes[fi] != FaceClass::NonTrivial {
                continue;
            }
            let (cbc, records) = &self.nodes[&(li + 1, k)];
            let b = process_nontrivial_face(self.g, &f.cycle, cbc, records)?;
            if b.len() as i64 > s - 1 {
                return Err(Error::Invariant(format!(
                    "face {:?} needs {} black vertices but the inner surplus is {s}",
                    f.id,
                    b.len()
                )));
            }
            black_sets[fi] = b;
        }

        let black: BTreeSet<usize> = black_sets.iter().flatten().copied().collect();
        for &v in &comp.boundary {
            self.colors[v] = Some(if black.contains(&v) { Color::Black } else { Color::White });
        }
        for (fi, f) in comp.faces.iter().enumerate() {
            self.faces.push(FaceRecord {
                level: li,
                component: j,
                face: f.id,
                class: classes[fi],
                black: black_sets[fi].iter().copied().collect(),
                inner_surplus: inner_surplus[fi],
            });
        }

        let nodes = bu_records(self.g, &comp.vertices, li, j, &self.colors)?;
        self.nodes.insert((li, j), nodes);
        Ok(())
    }
}

/// Contracted block-cut tree of the subgraph of `g` induced by `vertices`, with the
/// per-node counts. Every vertex in `vertices` must be colored.
pub fn bu_records(
    g: &PlaneGraph,
    vertices: &[usize],
    level: usize,
    component: usize,
    colors: &[Option<Color>],
) -> Result<(ContractedBcTree, Vec<BuRecord>)> {
    let inside: BTreeSet<usize> = vertices.iter().copied().collect();
    let bct = block_cut_tree_of(vertices, |v| {
        g.rotation(v).iter().copied().filter(|w| inside.contains(w)).collect()
    });
    let cbc = contract_bc_tree(&bct, colors)?;
    let white = |v: usize| colors[v] == Some(Color::White);
    let mut records = Vec::with_capacity(cbc.nodes.len());
    for (bi, node) in cbc.nodes.iter().enumerate() {
        let outer_walk = clockwise_outer_walk(g, &node.vertices)?;
        let surplus: i64 = node.vertices.iter().map(|&v| if white(v) { 1 } else { -1 }).sum();
        let on_outer: BTreeSet<usize> = outer_walk.iter().copied().collect();
        let outer_white = on_outer.iter().filter(|&&v| white(v)).count();
        let k = outer_walk.len();
        let white_edge = if k >= 2 {
            (0..k)
                .map(|i| (outer_walk[i], outer_walk[(i + 1) % k]))
                .filter(|&(a, b)| white(a) && white(b))
                .min()
        } else {
            None
        };
        let condition = if node.vertices.len() == 1 && white(node.vertices[0]) {
            Some(Condition::LoneWhite)
        } else if surplus > outer_white as i64 {
            Some(Condition::ExcessWhite)
        } else if surplus == outer_white as i64 && white_edge.is_some() {
            Some(Condition::WhiteOuterEdge)
        } else {
            None
        };
        records.push(BuRecord {
            level,
            component,
            node: bi,
            vertices: node.vertices.clone(),
            white: node.vertices.iter().copied().filter(|&v| white(v)).collect(),
            outer_walk,
            surplus,
            outer_white,
            white_edge,
            condition,
        });
    }
    Ok((cbc, records))
}

/// Outer walk of the subgraph induced by `vertices`, clockwise (the traced walk reversed).
pub fn clockwise_outer_walk(g: &PlaneGraph, vertices: &[usize]) -> Result<Vec<usize>> {
    if vertices.len() == 1 {
        return Ok(vertices.to_vec());
    }
    let h = induced_subgraph(g, vertices)?;
    let faces = h.graph.trace_faces()?;
    let outer = faces.iter().find(|f| f.is_outer).expect("outer face exists");
    let traced: Vec<usize> = outer.vertices().iter().map(|&v| h.to_host[v]).collect();
    let k = traced.len();
    Ok((0..k).map(|i| traced[(k - i) % k]).collect())
}

/// For `u` on the clockwise walk with successor `u'`: the neighbor of `u` in `g` that
/// immediately precedes `u'` in the rotation of `u`.
pub fn rightmost_neighbor(g: &PlaneGraph, walk_cw: &[usize], u: usize) -> Result<usize> {
    let pos: Vec<usize> = (0..walk_cw.len()).filter(|&i| walk_cw[i] == u).collect();
    if pos.len() != 1 {
        return Err(Error::Invariant(format!("vertex {u} appears {} times on the walk", pos.len())));
    }
    let next = walk_cw[(pos[0] + 1) % walk_cw.len()];
    let rot = g.rotation(u);
    let j = rot
        .iter()
        .position(|&w| w == next)
        .ok_or_else(|| Error::Invariant(format!("{next} is not a neighbor of {u}")))?;
    Ok(rot[(j + rot.len() - 1) % rot.len()])
}

/// Pairs trivial faces sharing a vertex, then gives each remaining face its smallest
/// vertex. Returns one chosen vertex per input face, in input order.
pub fn assign_trivial_faces(faces: &[(Dart, Vec<usize>)]) -> Vec<(Dart, usize)> {
    let mut order: Vec<usize> = (0..faces.len()).collect();
    order.sort_by_key(|&i| faces[i].0);
    let mut chosen: Vec<Option<usize>> = vec![None; faces.len()];
    loop {
        let mut incident: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &i in &order {
            if chosen[i].is_none() {
                let mut vs = faces[i].1.clone();
                vs.sort_unstable();
                vs.dedup();
                for v in vs {
                    incident.entry(v).or_default().push(i);
                }
            }
        }
        let Some((v, fs)) = incident.into_iter().find(|(_, fs)| fs.len() >= 2) else { break };
        chosen[fs[0]] = Some(v);
        chosen[fs[1]] = Some(v);
    }
    faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.0, chosen[i].unwrap_or_else(|| *f.1.iter().min().expect("face has vertices"))))
        .collect()
}

/// Order in which BU-nodes are handled: repeatedly the smallest node that is a leaf.
pub fn leaf_order(cbc: &ContractedBcTree) -> Vec<usize> {
    let mut deg_node = vec![0usize; cbc.nodes.len()];
    let mut deg_c = vec![0usize; cbc.c_nodes.len()];
    for &(b, c) in &cbc.links {
        deg_node[b] += 1;
        deg_c[c] += 1;
    }
    let mut node_gone = vec![false; cbc.nodes.len()];
    let mut c_gone = vec![false; cbc.c_nodes.len()];
    let mut order = Vec::with_capacity(cbc.nodes.len());
    while order.len() < cbc.nodes.len() {
        let Some(b) = (0..cbc.nodes.len()).find(|&b| !node_gone[b] && deg_node[b] <= 1) else {
            break;
        };
        node_gone[b] = true;
        order.push(b);
        for &(x, c) in &cbc.links {
            if x != b || c_gone[c] {
                continue;
            }
            deg_c[c] -= 1;
            if deg_c[c] <= 1 {
                c_gone[c] = true;
                for &(y, c2) in &cbc.links {
                    if c2 == c && !node_gone[y] {
                        deg_node[y] -= 1;
                    }
                }
            }
        }
    }
    order
}

/// Chooses `B_f` for a face whose inner component has white vertices left to protect.
pub fn process_nontrivial_face(
    g: &PlaneGraph,
    cycle: &[usize],
    cbc: &ContractedBcTree,
    records: &[BuRecord],
) -> Result<BTreeSet<usize>> {
    let mut black = BTreeSet::new();
    for b in leaf_order(cbc) {
        let rec = &records[b];
        let skip = match rec.condition {
            Some(Condition::ExcessWhite) => None,
            Some(Condition::WhiteOuterEdge) => rec.white_edge.map(|e| e.0),
            _ => {
                return Err(Error::Invariant(format!(
                    "BU-node {b} of component ({}, {}) meets no usable condition",
                    rec.level, rec.component
                )))
            }
        };
        let whites: BTreeSet<usize> = rec
            .outer_walk
            .iter()
            .copied()
            .filter(|&u| rec.white.binary_search(&u).is_ok() && Some(u) != skip)
            .collect();
        for u in whites {
            let r = rightmost_neighbor(g, &rec.outer_walk, u)?;
            if !cycle.contains(&r) {
                return Err(Error::Invariant(format!("neighbor {r} of {u} is not on the face cycle")));
            }
            black.insert(r);
        }
    }
    Ok(black)
}
