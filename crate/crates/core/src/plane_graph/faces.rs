use std::collections::BTreeMap;

use super::{loose_components, Dart, DartIndex, Issue, PlaneGraph, ValidationReport};

/// A region of the plane together with every walk bounding it.
///
/// For an internal face the enclosing walk comes first, followed by the outward walks
/// of components nested directly inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub walks: Vec<Vec<Dart>>,
    pub isolated: Vec<usize>,
    pub is_outer: bool,
}

impl Face {
    pub fn boundary(&self) -> &[Dart] {
        self.walks.first().map(Vec::as_slice).unwrap_or(&[])
    }

    /// Tails of the darts of the first walk, in walk order.
    pub fn vertices(&self) -> Vec<usize> {
        self.boundary().iter().map(|d| d.0).collect()
    }

    /// Number of darts over all walks.
    pub fn len(&self) -> usize {
        self.walks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }
}

#[derive(Debug, Clone)]
pub(crate) struct FaceStructure {
    pub darts: DartIndex,
    pub walks: Vec<Vec<usize>>,
    pub walk_of: Vec<usize>,
    pub walk_face: Vec<usize>,
    pub faces: Vec<Face>,
    pub outer: usize,
    /// Face holding each isolated vertex, `usize::MAX` for the others.
    pub isolated_face: Vec<usize>,
    pub component_of: Vec<usize>,
    pub components: Vec<Vec<usize>>,
}

impl FaceStructure {
    pub fn dart_face(&self, d: usize) -> usize {
        self.walk_face[self.walk_of[d]]
    }

    /// One face per corner of `v`, or the face an isolated `v` lies in.
    pub fn vertex_faces(&self, v: usize) -> Vec<usize> {
        let r = self.darts.out_darts(v);
        if r.is_empty() {
            vec![self.isolated_face[v]]
        } else {
            r.map(|d| self.dart_face(d)).collect()
        }
    }

    pub fn some_face_of_vertex(&self, v: usize) -> usize {
        let mut r = self.darts.out_darts(v);
        match r.next() {
            Some(d) => self.dart_face(d),
            None => self.isolated_face[v],
        }
    }

    pub fn vertices_on_face(&self, f: usize) -> Vec<usize> {
        let face = &self.faces[f];
        let mut out: Vec<usize> =
            face.walks.iter().flatten().map(|d| d.0).chain(face.isolated.iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn on_outer_face(&self, v: usize) -> bool {
        self.vertex_faces(v).contains(&self.outer)
    }
}

pub(crate) fn analyze(g: &PlaneGraph) -> (ValidationReport, Option<FaceStructure>) {
    let n = g.vertex_count();
    let darts = match DartIndex::build(g.rotations()) {
        Ok(d) => d,
        Err(issues) => return (ValidationReport { issues }, None),
    };
    let mut issues = Vec::new();
    let walks = darts.walks();
    let mut walk_of = vec![0; darts.len()];
    for (wi, w) in walks.iter().enumerate() {
        for &d in w {
            walk_of[d] = wi;
        }
    }
    let components = loose_components(g.rotations());
    let mut component_of = vec![0; n];
    for (ci, c) in components.iter().enumerate() {
        for &v in c {
            component_of[v] = ci;
        }
    }

    let mut walk_count = vec![0usize; components.len()];
    for w in &walks {
        walk_count[component_of[darts.tail(w[0])]] += 1;
    }
    for (ci, c) in components.iter().enumerate() {
        let edges: usize = c.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        if edges == 0 {
            continue;
        }
        let euler = c.len() as i64 - edges as i64 + walk_count[ci] as i64;
        if euler != 2 {
            issues.push(Issue::NonPlanarComponent { anchor: c[0], euler });
        }
    }

    let mut placement_of: Vec<Option<usize>> = vec![None; components.len()];
    let mut outer_walk_of: Vec<Option<usize>> = vec![None; components.len()];
    for (pi, p) in g.placements().iter().enumerate() {
        if p.anchor >= n {
            issues.push(Issue::BadOuterDart(*p));
            continue;
        }
        let c = component_of[p.anchor];
        if placement_of[c].is_some() {
            issues.push(Issue::DuplicatePlacement(components[c][0]));
            continue;
        }
        placement_of[c] = Some(pi);
        let has_edges = components[c].iter().any(|&v| g.degree(v) > 0);
        match (p.outer, has_edges) {
            (Some((a, b)), true) => match darts.dart(a, b) {
                Some(d) if component_of[a] == c => outer_walk_of[c] = Some(walk_of[d]),
                _ => issues.push(Issue::BadOuterDart(*p)),
            },
            (None, false) => {}
            _ => issues.push(Issue::BadOuterDart(*p)),
        }
    }
    for (c, p) in placement_of.iter().enumerate() {
        if p.is_none() {
            issues.push(Issue::MissingPlacement(components[c][0]));
        }
    }
    let is_outer_walk: Vec<bool> = {
        let mut v = vec![false; walks.len()];
        for w in outer_walk_of.iter().flatten() {
            v[*w] = true;
        }
        v
    };

    let mut parent: Vec<Option<usize>> = vec![None; components.len()];
    let mut enclosing_walk: Vec<Option<usize>> = vec![None; components.len()];
    for (c, p) in placement_of.iter().enumerate() {
        let Some(pi) = p else { continue };
        let p = g.placements()[*pi];
        if let Some((a, b)) = p.inside {
            match darts.dart(a, b) {
                Some(d) if component_of[a] != c && !is_outer_walk[walk_of[d]] => {
                    parent[c] = Some(component_of[a]);
                    enclosing_walk[c] = Some(walk_of[d]);
                }
                _ => issues.push(Issue::BadInsideDart(p)),
            }
        }
    }
    for c in 0..components.len() {
        let mut steps = 0;
        let mut cur = parent[c];
        while let Some(x) = cur {
            steps += 1;
            if x == c || steps > components.len() {
                issues.push(Issue::NestingCycle(components[c][0]));
                break;
            }
            cur = parent[x];
        }
    }
    if !issues.is_empty() {
        return (ValidationReport { issues }, None);
    }

    // Regions are keyed by their enclosing walk; `None` is the outer region.
    #[derive(Default)]
    struct Region {
        children: Vec<usize>,
        isolated: Vec<usize>,
    }
    let mut regions: BTreeMap<Option<usize>, Region> = BTreeMap::new();
    regions.entry(None).or_default();
    for (wi, _) in walks.iter().enumerate() {
        if !is_outer_walk[wi] {
            regions.entry(Some(wi)).or_default();
        }
    }
    for c in 0..components.len() {
        let key = enclosing_walk[c];
        match outer_walk_of[c] {
            Some(w) => regions.get_mut(&key).expect("region exists").children.push(w),
            None => regions.get_mut(&key).expect("region exists").isolated.push(components[c][0]),
        }
    }

    let pair_walk = |w: usize| -> Vec<Dart> { walks[w].iter().map(|&d| darts.pair(d)).collect() };
    let mut built: Vec<(Option<Dart>, Face, Vec<usize>)> = Vec::new();
    for (key, region) in regions {
        let mut children = region.children;
        children.sort_by_key(|&w| darts.pair(walks[w][0]));
        let mut member_walks: Vec<usize> = key.into_iter().collect();
        member_walks.extend(children);
        let min = member_walks.iter().map(|&w| darts.pair(walks[w][0])).min();
        let mut isolated = region.isolated;
        isolated.sort_unstable();
        let face = Face {
            id: 0,
            walks: member_walks.iter().map(|&w| pair_walk(w)).collect(),
            isolated,
            is_outer: key.is_none(),
        };
        built.push((min, face, member_walks));
    }
    built.sort_by_key(|b| b.0);

    let mut walk_face = vec![0; walks.len()];
    let mut isolated_face = vec![usize::MAX; n];
    let mut faces = Vec::with_capacity(built.len());
    let mut outer = 0;
    for (id, (_, mut face, member_walks)) in built.into_iter().enumerate() {
        face.id = id;
        for w in member_walks {
            walk_face[w] = id;
        }
        for &v in &face.isolated {
            isolated_face[v] = id;
        }
        if face.is_outer {
            outer = id;
        }
        faces.push(face);
    }

    let (v, e, f, c) = (n, darts.len() / 2, faces.len(), components.len());
    if v as i64 - e as i64 + f as i64 != 1 + c as i64 {
        issues.push(Issue::EulerMismatch { vertices: v, edges: e, faces: f, components: c });
        return (ValidationReport { issues }, None);
    }

    let fs = FaceStructure {
        darts,
        walks,
        walk_of,
        walk_face,
        faces,
        outer,
        isolated_face,
        component_of,
        components,
    };
    (ValidationReport::default(), Some(fs))
}
