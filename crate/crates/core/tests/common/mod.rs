#![allow(dead_code)]

use sefe_core::cycle_breaker::Color;
use sefe_core::PlaneGraph;

pub fn triangle() -> PlaneGraph {
    PlaneGraph::new(vec![vec![1, 2], vec![2, 0], vec![0, 1]], Some((0, 2)))
}

/// Vertex 3 inside the triangle 0, 1, 2.
pub fn k4() -> PlaneGraph {
    let faces = vec![vec![0, 2, 1], vec![0, 1, 3], vec![1, 2, 3], vec![2, 0, 3]];
    PlaneGraph::from_faces(4, &faces, 0).unwrap()
}

/// Outer triangle 0, 1, 2 around the inner triangle 3, 4, 5.
pub fn octahedron() -> PlaneGraph {
    let faces = vec![
        vec![0, 2, 1],
        vec![0, 1, 3],
        vec![1, 4, 3],
        vec![1, 2, 4],
        vec![2, 5, 4],
        vec![2, 0, 5],
        vec![0, 3, 5],
        vec![3, 4, 5],
    ];
    PlaneGraph::from_faces(6, &faces, 0).unwrap()
}

/// The 4-cycle 0, 1, 2, 3 with nothing inside.
pub fn square() -> PlaneGraph {
    PlaneGraph::from_faces(4, &[vec![0, 1, 2, 3], vec![0, 3, 2, 1]], 1).unwrap()
}

pub fn path3() -> PlaneGraph {
    PlaneGraph::new(vec![vec![1], vec![0, 2], vec![1]], None)
}

pub fn coloring(n: usize, white: &[usize]) -> Vec<Color> {
    (0..n).map(|v| if white.contains(&v) { Color::White } else { Color::Black }).collect()
}

/// Proptest settings with regressions stored next to the test sources.
pub fn cases(n: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config {
        cases: n,
        failure_persistence: Some(Box::new(
            proptest::test_runner::FileFailurePersistence::WithSource("regressions"),
        )),
        ..Default::default()
    }
}
