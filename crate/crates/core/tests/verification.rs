mod common;

use common::{coloring, k4, octahedron, triangle};
use proptest::prelude::*;
use sefe_core::plane_graph::induced_subgraph;
use sefe_core::verification::{
    brute_force_max, check_lemma1, gen_nested_cycles, gen_random_maximal, gen_random_planar,
    independent_set_baseline, is_outerplane, is_strongly_outerplane, OracleMode,
};
use sefe_core::{extract_outerplane_set, peel, Error, PlaneGraph};

/// Strong outerplanarity straight from the induced embedding: every kept vertex on the
/// outer face and every dropped vertex assigned to the outer face.
fn naive_check(g: &PlaneGraph, subset: &[usize], strong: bool) -> bool {
    if subset.is_empty() {
        return true;
    }
    let h = induced_subgraph(g, subset).unwrap();
    let mut outer = h.outer_vertices_in_host().unwrap();
    outer.sort();
    if outer != subset {
        return false;
    }
    if !strong {
        return true;
    }
    let faces = h.graph.trace_faces().unwrap();
    let outer_id = faces.iter().find(|f| f.is_outer).unwrap().id;
    h.assignment.values().all(|&f| f == outer_id)
}

fn naive_max(g: &PlaneGraph, strong: bool) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|m| {
            let s: Vec<usize> = (0..n).filter(|v| m >> v & 1 == 1).collect();
            naive_check(g, &s, strong)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

fn naive_mis(g: &PlaneGraph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|m| g.edges().iter().all(|&(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

#[test]
fn outerplane_examples() {
    assert!(!is_outerplane(&k4(), &[0, 1, 2, 3]).unwrap());
    assert!(is_outerplane(&k4(), &[0, 1, 3]).unwrap());
    assert!(is_outerplane(&octahedron(), &[0, 1, 2]).unwrap());
}

#[test]
fn strongly_outerplane_examples() {
    assert!(!is_strongly_outerplane(&k4(), &coloring(4, &[0, 1, 2])).unwrap());
    assert!(is_strongly_outerplane(&k4(), &coloring(4, &[0, 1, 3])).unwrap());
    assert!(is_strongly_outerplane(&triangle(), &coloring(3, &[0, 1, 2])).unwrap());
}

#[test]
fn lemma_conditions_examples() {
    let g = octahedron();
    let d = peel(&g).unwrap();
    let ex = extract_outerplane_set(&g).unwrap();
    let report = check_lemma1(&g, &d, &coloring(6, &ex.v_prime)).unwrap();
    assert!(report.holds());
    assert!(report.nodes_checked >= 2);

    let all_black = check_lemma1(&g, &d, &coloring(6, &[])).unwrap();
    assert!(!all_black.holds());

    let g = k4();
    let d = peel(&g).unwrap();
    let ex = extract_outerplane_set(&g).unwrap();
    let report = check_lemma1(&g, &d, &coloring(4, &ex.v_prime)).unwrap();
    assert!(report.holds());
}

#[test]
fn oracle_examples() {
    let best = brute_force_max(&k4(), OracleMode::StronglyOuterplane, 18).unwrap();
    assert_eq!(best.max_size, naive_max(&k4(), true));
    assert_eq!(best.max_size, 3);
    assert_eq!(brute_force_max(&triangle(), OracleMode::StronglyOuterplane, 18).unwrap().max_size, 3);

    let nested = gen_nested_cycles(3, 3).unwrap();
    let best = brute_force_max(&nested, OracleMode::StronglyOuterplane, 18).unwrap();
    assert_eq!(best.max_size, naive_max(&nested, true));
    assert_eq!(best.max_size, 6);
    assert!(naive_check(&nested, &best.witness, true));
}

#[test]
fn oracle_cap_is_enforced() {
    let g = gen_random_maximal(12, 0).unwrap();
    assert!(matches!(
        brute_force_max(&g, OracleMode::Outerplane, 10),
        Err(Error::OracleCapExceeded { n: 12, cap: 10 })
    ));
}

#[test]
fn generator_examples() {
    let t = gen_nested_cycles(1, 3).unwrap();
    assert_eq!((t.vertex_count(), t.edge_count()), (3, 3));
    let o = gen_nested_cycles(2, 3).unwrap();
    assert_eq!((o.vertex_count(), o.edge_count()), (6, 12));
    assert!(o.is_maximal());
    let s = gen_nested_cycles(3, 4).unwrap();
    assert_eq!((s.vertex_count(), s.edge_count()), (12, 30));
    assert!(s.validate().is_valid());

    let g = gen_random_maximal(3, 5).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
    let g = gen_random_maximal(10, 7).unwrap();
    assert!(g.validate().is_valid());
    assert_eq!(g.edge_count(), 24);
    assert_eq!(g.to_json_string(), gen_random_maximal(10, 7).unwrap().to_json_string());
    let differ = (0..5).any(|s| {
        gen_random_maximal(10, s).unwrap().rotations() != gen_random_maximal(10, s + 100).unwrap().rotations()
    });
    assert!(differ);
}

#[test]
fn independent_set_examples() {
    assert_eq!(independent_set_baseline(&k4(), 18).len(), 1);
    assert_eq!(independent_set_baseline(&octahedron(), 18).len(), 2);
    assert_eq!(independent_set_baseline(&triangle(), 18).len(), 1);
}

#[test]
fn nested_squares_stay_near_half() {
    let mut excess = Vec::new();
    for s in 2..=10 {
        let g = gen_nested_cycles(s, 4).unwrap();
        let n = g.vertex_count();
        let k = extract_outerplane_set(&g).unwrap().v_prime.len();
        assert!(2 * k >= n);
        assert!(2 * k <= n + 8, "shells {s}: {k} of {n}");
        excess.push(2 * k - n);
    }
    println!("nested squares, 2|V'| - n for shells 2..=10: {excess:?}");
}

fn small_maximal() -> impl Strategy<Value = PlaneGraph> {
    (4usize..=11, any::<u64>()).prop_map(|(n, seed)| gen_random_maximal(n, seed).unwrap())
}

proptest! {
    #![proptest_config(common::cases(48))]

    #[test]
    fn oracle_matches_naive_search(g in small_maximal()) {
        for (mode, strong) in [(OracleMode::Outerplane, false), (OracleMode::StronglyOuterplane, true)] {
            let r = brute_force_max(&g, mode, 18).unwrap();
            prop_assert_eq!(r.max_size, naive_max(&g, strong));
            prop_assert!(naive_check(&g, &r.witness, strong));
        }
    }

    #[test]
    fn oracle_dominates_extraction(g in small_maximal()) {
        let k = extract_outerplane_set(&g).unwrap().v_prime.len();
        let best = brute_force_max(&g, OracleMode::StronglyOuterplane, 18).unwrap().max_size;
        prop_assert!(best >= k);
        prop_assert!(2 * k >= g.vertex_count());
    }

    #[test]
    fn strong_implies_plain(n in 4usize..30, keep in 0.3..1.0f64, seed in any::<u64>(), mask in any::<u32>()) {
        let g = gen_random_planar(n, keep, seed).unwrap();
        let white: Vec<usize> = (0..n).filter(|v| mask >> (v % 32) & 1 == 1).collect();
        if is_strongly_outerplane(&g, &coloring(n, &white)).unwrap() {
            prop_assert!(is_outerplane(&g, &white).unwrap());
        }
        prop_assert_eq!(is_outerplane(&g, &white).unwrap(), naive_check(&g, &white, false));
        prop_assert_eq!(
            is_strongly_outerplane(&g, &coloring(n, &white)).unwrap(),
            naive_check(&g, &white, true)
        );
    }

    #[test]
    fn independent_set_is_exact_and_independent(g in small_maximal()) {
        let s = independent_set_baseline(&g, 18);
        prop_assert_eq!(s.len(), naive_mis(&g));
        for &(u, v) in &g.edges() {
            prop_assert!(!(s.contains(&u) && s.contains(&v)));
        }
    }

    #[test]
    fn greedy_independent_set_is_independent(n in 20usize..60, seed in any::<u64>()) {
        let g = gen_random_maximal(n, seed).unwrap();
        let s = independent_set_baseline(&g, 18);
        prop_assert!(!s.is_empty());
        for &(u, v) in &g.edges() {
            prop_assert!(!(s.contains(&u) && s.contains(&v)));
        }
    }
}
