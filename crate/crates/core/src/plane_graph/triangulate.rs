use super::{Dart, DartIndex, PlaneGraph, Placement};
use crate::error::{Error, Result};

/// Edges added by an augmentation, as `(u, v)` with `u < v` in insertion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AugmentationRecord {
    pub added_edges: Vec<(usize, usize)>,
}

/// Adds edges until the graph is maximal plane, keeping the given embedding intact.
///
/// Components are first joined to the walk enclosing them, then every face longer
/// than three is fanned out from its smallest corner.
pub fn triangulate(g: &PlaneGraph) -> Result<(PlaneGraph, AugmentationRecord)> {
    let n = g.vertex_count();
    if n < 3 {
        return Err(Error::TooFewVertices { needed: 3, found: n });
    }
    g.check()?;
    let mut rot = g.rotations().to_vec();
    let mut record = AugmentationRecord::default();
    let outer = connect_components(&mut rot, g.placements(), &mut record)?;
    triangulate_faces(&mut rot, &mut record)?;
    let out = PlaneGraph::with_placements(
        rot,
        vec![Placement { anchor: 0, outer: Some(outer), inside: None }],
    )
    .with_labels(g.labels().map(<[_]>::to_vec));
    if out.edge_count() != 3 * n - 6 {
        return Err(Error::Invariant("triangulation did not reach 3n - 6 edges".into()));
    }
    Ok((out, record))
}

/// Inserts `x` into the corner of `v` that follows the dart `(p, v)`.
fn insert_before(rot: &mut [Vec<usize>], v: usize, p: Option<usize>, x: usize) {
    match p.and_then(|p| rot[v].iter().position(|&w| w == p)) {
        Some(i) => rot[v].insert(i, x),
        None => rot[v].push(x),
    }
}

fn add_edge(
    rot: &mut [Vec<usize>],
    record: &mut AugmentationRecord,
    (a, before_a): (usize, Option<usize>),
    (b, before_b): (usize, Option<usize>),
) {
    insert_before(rot, a, before_a, b);
    insert_before(rot, b, before_b, a);
    record.added_edges.push((a.min(b), a.max(b)));
}

/// Joins every component to the walk that encloses it, or to the first root component.
/// Returns a dart of the outer face of the connected result.
pub(crate) fn connect_components(
    rot: &mut [Vec<usize>],
    placements: &[Placement],
    record: &mut AugmentationRecord,
) -> Result<Dart> {
    let root = placements
        .iter()
        .find(|p| p.inside.is_none())
        .copied()
        .ok_or_else(|| Error::Invariant("no component in the outer face".into()))?;
    let root_corner = match root.outer {
        Some((a, b)) => (b, Some(a)),
        None => (root.anchor, None),
    };
    for p in placements {
        if *p == root {
            continue;
        }
        let child = match p.outer {
            Some((a, b)) => (b, Some(a)),
            None => (p.anchor, None),
        };
        let host = match p.inside {
            Some((a, b)) => (b, Some(a)),
            None => root_corner,
        };
        add_edge(rot, record, child, host);
    }
    match root.outer {
        Some(d) => Ok(d),
        None => rot[root.anchor]
            .first()
            .map(|&w| (root.anchor, w))
            .ok_or_else(|| Error::Invariant("graph has no edges after joining".into())),
    }
}

/// Splits faces of a connected embedding until all have length three.
pub(crate) fn triangulate_faces(rot: &mut [Vec<usize>], record: &mut AugmentationRecord) -> Result<()> {
    loop {
        let darts = DartIndex::build(rot)
            .map_err(|e| Error::Invariant(format!("augmentation broke the rotation system: {e:?}")))?;
        let walks = darts.walks();
        let Some(walk) = walks.iter().find(|w| w.len() > 3) else {
            return Ok(());
        };
        let xs: Vec<usize> = walk.iter().map(|&d| darts.tail(d)).collect();
        let len = xs.len();
        let mut corners: Vec<usize> = (0..len).collect();
        corners.sort_by_key(|&i| (xs[i], i));
        let at = |i: usize| xs[i % len];
        let prev = |i: usize| xs[(i + len - 1) % len];

        let ear = corners.iter().copied().find(|&i| {
            let (a, c) = (at(i), at(i + 2));
            a != c && !rot[a].contains(&c)
        });
        if let Some(i) = ear {
            add_edge(rot, record, (at(i), Some(prev(i))), (at(i + 2), Some(at(i + 1))));
            continue;
        }
        let chord = corners.iter().copied().find_map(|i| {
            (0..len)
                .find(|&j| at(j) != at(i) && !rot[at(i)].contains(&at(j)))
                .map(|j| (i, j))
        });
        match chord {
            Some((i, j)) => add_edge(rot, record, (at(i), Some(prev(i))), (at(j), Some(prev(j)))),
            None => return Err(Error::Invariant("face has no admissible chord".into())),
        }
    }
}
