mod common;

use std::collections::BTreeMap;

use common::{k4, octahedron, triangle};
use proptest::prelude::*;
use sefe_core::cycle_breaker::Color;
use sefe_core::decomposition::{block_cut_tree, contract_bc_tree};
use sefe_core::plane_graph::induced_subgraph;
use sefe_core::verification::{gen_nested_cycles, gen_random_maximal};
use sefe_core::{peel, PlaneGraph};

/// Two triangles 0 1 2 and 2 3 4 sharing vertex 2.
fn bowtie() -> PlaneGraph {
    let faces = vec![vec![0, 1, 2], vec![2, 3, 4], vec![0, 2, 4, 3, 2, 1]];
    PlaneGraph::from_faces(5, &faces, 2).unwrap()
}

#[test]
fn peel_examples() {
    let d = peel(&triangle()).unwrap();
    assert_eq!(d.levels, vec![vec![0, 1, 2]]);

    let d = peel(&k4()).unwrap();
    assert_eq!(d.levels, vec![vec![0, 1, 2], vec![3]]);
    let top = d.component(0, 0);
    let holding: Vec<_> = top.faces.iter().filter(|f| f.inner.is_some()).collect();
    assert_eq!(holding.len(), 1);
    assert_eq!(d.component(1, holding[0].inner.unwrap()).vertices, vec![3]);

    let d = peel(&octahedron()).unwrap();
    assert_eq!(d.levels, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    assert_eq!(d.component(1, 0).vertices, vec![3, 4, 5]);
}

#[test]
fn peel_rejects_non_maximal() {
    let g = PlaneGraph::new(vec![vec![1], vec![0, 2], vec![1]], None);
    assert!(peel(&g).is_err());
}

#[test]
fn nested_triangles_have_one_level_per_shell() {
    for c in 1..=6 {
        let d = peel(&gen_nested_cycles(c, 3).unwrap()).unwrap();
        assert_eq!(d.depth(), c);
        assert!(d.levels.iter().all(|l| l.len() == 3));
    }
}

#[test]
fn block_cut_tree_examples() {
    let t = block_cut_tree(&triangle()).unwrap();
    assert_eq!((t.blocks.len(), t.cutvertices.len()), (1, 0));

    let t = block_cut_tree(&bowtie()).unwrap();
    assert_eq!(t.blocks.len(), 2);
    assert_eq!(t.cutvertices, vec![2]);
    assert_eq!(t.links.len(), 2);

    let single = PlaneGraph::new(vec![vec![]], None);
    let t = block_cut_tree(&single).unwrap();
    assert_eq!((t.blocks.len(), t.cutvertices.len()), (1, 0));

    let two = PlaneGraph::new(vec![vec![], vec![]], None);
    assert!(block_cut_tree(&two).is_err());
}

#[test]
fn contraction_examples() {
    let t = block_cut_tree(&bowtie()).unwrap();
    let white = vec![Some(Color::White); 5];
    let c = contract_bc_tree(&t, &white).unwrap();
    assert_eq!(c.nodes.len(), 2);
    assert_eq!(c.c_nodes, vec![2]);

    let mut black_cut = white.clone();
    black_cut[2] = Some(Color::Black);
    let c = contract_bc_tree(&t, &black_cut).unwrap();
    assert_eq!(c.nodes.len(), 1);
    assert!(c.c_nodes.is_empty());
    assert_eq!(c.nodes[0].vertices, vec![0, 1, 2, 3, 4]);

    let t = block_cut_tree(&triangle()).unwrap();
    let c = contract_bc_tree(&t, &[Some(Color::White); 3]).unwrap();
    assert_eq!((c.nodes.len(), c.links.len()), (1, 0));

    let mut partial = white;
    partial[0] = None;
    assert!(contract_bc_tree(&t, &partial[..3]).is_err());
}

/// Levels by repeatedly taking the outer-face vertices of what is left.
fn levels_by_deletion(g: &PlaneGraph) -> Vec<Vec<usize>> {
    let mut alive: Vec<usize> = (0..g.vertex_count()).collect();
    let mut levels = Vec::new();
    while !alive.is_empty() {
        let h = induced_subgraph(g, &alive).unwrap();
        let mut outer = h.outer_vertices_in_host().unwrap();
        outer.sort();
        alive.retain(|v| outer.binary_search(v).is_err());
        levels.push(outer);
    }
    levels
}

fn maximal() -> impl Strategy<Value = PlaneGraph> {
    (4usize..40, any::<u64>()).prop_map(|(n, seed)| gen_random_maximal(n, seed).unwrap())
}

proptest! {
    #![proptest_config(common::cases(64))]

    #[test]
    fn levels_match_repeated_deletion(g in maximal()) {
        let d = peel(&g).unwrap();
        prop_assert_eq!(&d.levels, &levels_by_deletion(&g));
        let total: usize = d.levels.iter().map(Vec::len).sum();
        prop_assert_eq!(total, g.vertex_count());
        for (i, level) in d.levels.iter().enumerate() {
            for &v in level {
                prop_assert_eq!(d.level_of[v], i);
            }
        }
    }

    #[test]
    fn components_are_internally_triangulated(g in maximal()) {
        let d = peel(&g).unwrap();
        for comps in &d.components {
            for comp in comps {
                let h = induced_subgraph(&g, &comp.vertices).unwrap();
                prop_assert!(h.graph.is_connected());
                prop_assert!(h.graph.validate().is_valid());
                for f in h.graph.trace_faces().unwrap() {
                    prop_assert!(f.is_outer || f.len() == 3);
                }
            }
        }
    }

    #[test]
    fn every_inner_component_sits_in_one_face(g in maximal()) {
        let d = peel(&g).unwrap();
        for i in 1..d.depth() {
            let mut count = vec![0usize; d.components[i].len()];
            for comp in &d.components[i - 1] {
                for f in &comp.faces {
                    if let Some(k) = f.inner {
                        count[k] += 1;
                    }
                }
            }
            prop_assert!(count.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn contraction_accounting(g in maximal(), mask in any::<u64>()) {
        let d = peel(&g).unwrap();
        let colors: Vec<Option<Color>> = (0..g.vertex_count())
            .map(|v| Some(if mask >> (v % 64) & 1 == 1 { Color::Black } else { Color::White }))
            .collect();
        for comp in d.components.iter().flatten() {
            let h = induced_subgraph(&g, &comp.boundary).unwrap();
            if !h.graph.is_connected() {
                continue;
            }
            let t = block_cut_tree(&h.graph).unwrap();
            let local: Vec<Option<Color>> = h.to_host.iter().map(|&v| colors[v]).collect();
            let c = contract_bc_tree(&t, &local).unwrap();
            // A tree: connected with one link fewer than nodes.
            prop_assert_eq!(c.links.len() + 1, c.nodes.len() + c.c_nodes.len());
            let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
            for &(_, ci) in &c.links {
                *degree.entry(ci).or_default() += 1;
            }
            let counted: usize = c.nodes.iter().map(|b| b.vertices.len()).sum();
            let extra: usize = degree.values().map(|k| k - 1).sum();
            prop_assert_eq!(counted, h.graph.vertex_count() + extra);
            for &cv in &c.c_nodes {
                prop_assert_eq!(local[cv], Some(Color::White));
            }
        }
    }
}
