use std::collections::BTreeSet;

use serde::Serialize;

use crate::cycle_breaker::Color;
use crate::decomposition::{block_cut_tree_of, contract_bc_tree, OuterplaneDecomposition};
use crate::error::{Error, Result};
use crate::plane_graph::{induced_subgraph, PlaneGraph};

/// Every vertex of `subset` lies on the outer face of `G[subset]`.
pub fn is_outerplane(g: &PlaneGraph, subset: &[usize]) -> Result<bool> {
    let h = induced_subgraph(g, subset)?;
    let fs = h.graph.face_structure()?;
    Ok((0..h.graph.vertex_count()).all(|v| fs.on_outer_face(v)))
}

/// White vertices induce an outerplane graph and every black vertex lies in its outer face.
pub fn is_strongly_outerplane(g: &PlaneGraph, colors: &[Color]) -> Result<bool> {
    if colors.len() != g.vertex_count() {
        return Err(Error::PartialColoring(colors.len().min(g.vertex_count())));
    }
    let white: Vec<usize> = (0..colors.len()).filter(|&v| colors[v] == Color::White).collect();
    let h = induced_subgraph(g, &white)?;
    let fs = h.graph.face_structure()?;
    let outer_ok = (0..h.graph.vertex_count()).all(|v| fs.on_outer_face(v));
    let black_ok = h.assignment.values().all(|&f| f == fs.outer);
    Ok(outer_ok && black_ok)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// The white part of the component is not strongly outerplane inside it.
    NotStronglyOuterplane,
    /// A BU-node meets none of the three counting conditions.
    Counting { vertices: Vec<usize>, surplus: i64, outer_white: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionFailure {
    pub level: usize,
    pub component: usize,
    pub kind: FailureKind,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub components_checked: usize,
    pub nodes_checked: usize,
    pub failures: Vec<ConditionFailure>,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for every level component, that its coloring is strongly outerplane and
/// that each node of its contracted block-cut tree meets a counting condition.
///
/// Outer vertices and white outer edges are recomputed from face tracing rather than
/// taken from the coloring records.
pub fn check_lemma1(
    g: &PlaneGraph,
    d: &OuterplaneDecomposition,
    colors: &[Color],
) -> Result<ConditionReport> {
    let opt: Vec<Option<Color>> = colors.iter().copied().map(Some).collect();
    let mut report = ConditionReport::default();
    for (li, comps) in d.components.iter().enumerate() {
        for (j, comp) in comps.iter().enumerate() {
            report.components_checked += 1;
            let hstar = induced_subgraph(g, &comp.vertices)?;
            let local: Vec<Color> = hstar.to_host.iter().map(|&v| colors[v]).collect();
            if !is_strongly_outerplane(&hstar.graph, &local)? {
                report.failures.push(ConditionFailure {
                    level: li,
                    component: j,
                    kind: FailureKind::NotStronglyOuterplane,
                });
            }

            let inside: BTreeSet<usize> = comp.vertices.iter().copied().collect();
            let bct = block_cut_tree_of(&comp.vertices, |v| {
                g.rotation(v).iter().copied().filter(|w| inside.contains(w)).collect()
            });
            let cbc = contract_bc_tree(&bct, &opt)?;
            for node in &cbc.nodes {
                report.nodes_checked += 1;
                let white = |v: usize| colors[v] == Color::White;
                let surplus: i64 = node.vertices.iter().map(|&v| if white(v) { 1 } else { -1 }).sum();
                let h = induced_subgraph(g, &node.vertices)?;
                let fs = h.graph.face_structure()?;
                let outer_white = (0..h.graph.vertex_count())
                    .filter(|&v| fs.on_outer_face(v) && white(h.to_host[v]))
                    .count();
                let white_outer_edge = (0..fs.darts.len()).any(|dd| {
                    let (a, b) = fs.darts.pair(dd);
                    fs.dart_face(dd) == fs.outer && white(h.to_host[a]) && white(h.to_host[b])
                });
                let lone = node.vertices.len() == 1 && surplus == 1;
                let excess = surplus > outer_white as i64;
                let edge = surplus == outer_white as i64 && white_outer_edge;
                if !(lone || excess || edge) {
                    report.failures.push(ConditionFailure {
                        level: li,
                        component: j,
                        kind: FailureKind::Counting {
                            vertices: node.vertices.clone(),
                            surplus,
                            outer_white,
                        },
                    });
                }
            }
        }
    }
    Ok(report)
}
