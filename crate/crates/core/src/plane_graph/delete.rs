use std::collections::{BTreeMap, HashMap, VecDeque};

use super::{loose_components, DartIndex, PlaneGraph, Placement};
use crate::error::{Error, Result};
use crate::union_find::UnionFind;

/// A subgraph with the embedding inherited from its host, relabeled to `0..k`.
///
/// `assignment` maps every removed host vertex to the face of `graph` it ends up in.
#[derive(Debug, Clone)]
pub struct InducedPlaneGraph {
    pub graph: PlaneGraph,
    pub to_host: Vec<usize>,
    pub from_host: Vec<Option<usize>>,
    pub assignment: BTreeMap<usize, usize>,
}

impl InducedPlaneGraph {
    /// Host ids of the vertices on the outer face of the subgraph.
    pub fn outer_vertices_in_host(&self) -> Result<Vec<usize>> {
        Ok(self.graph.outer_vertices()?.into_iter().map(|v| self.to_host[v]).collect())
    }
}

pub fn delete_vertices(g: &PlaneGraph, removed: &[usize]) -> Result<InducedPlaneGraph> {
    let mut keep = vec![true; g.vertex_count()];
    for &v in removed {
        *keep.get_mut(v).ok_or(Error::VertexOutOfRange(v))? = false;
    }
    restrict(g, &keep, |_, _| true)
}

pub fn induced_subgraph(g: &PlaneGraph, vertices: &[usize]) -> Result<InducedPlaneGraph> {
    let mut keep = vec![false; g.vertex_count()];
    for &v in vertices {
        *keep.get_mut(v).ok_or(Error::VertexOutOfRange(v))? = true;
    }
    restrict(g, &keep, |_, _| true)
}

/// Drops the given edges and keeps every vertex under its old id.
pub fn remove_edges(g: &PlaneGraph, edges: &[(usize, usize)]) -> Result<PlaneGraph> {
    let set: std::collections::HashSet<(usize, usize)> =
        edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let keep = vec![true; g.vertex_count()];
    Ok(restrict(g, &keep, |u, v| !set.contains(&(u, v)))?.graph)
}

/// Keeps vertices with `keep[v]` and edges `(u, v)`, `u < v`, accepted by `keep_edge`.
///
/// Host faces are merged across every dropped edge; the merged classes are exactly
/// the regions of the subgraph, which fixes where each component and each removed
/// vertex ends up.
pub(crate) fn restrict<F>(g: &PlaneGraph, keep: &[bool], keep_edge: F) -> Result<InducedPlaneGraph>
where
    F: Fn(usize, usize) -> bool,
{
    let fs = g.face_structure()?;
    let n = g.vertex_count();
    let kept = |u: usize, v: usize| keep[u] && keep[v] && keep_edge(u.min(v), u.max(v));

    let mut uf = UnionFind::new(fs.faces.len());
    for d in 0..fs.darts.len() {
        let (u, v) = fs.darts.pair(d);
        if u < v && !kept(u, v) {
            uf.union(fs.dart_face(d), fs.dart_face(fs.darts.twin(d)));
        }
    }

    let to_host: Vec<usize> = (0..n).filter(|&v| keep[v]).collect();
    let mut from_host = vec![None; n];
    for (i, &v) in to_host.iter().enumerate() {
        from_host[v] = Some(i);
    }
    let rotations: Vec<Vec<usize>> = to_host
        .iter()
        .map(|&u| {
            g.rotation(u)
                .iter()
                .filter(|&&v| kept(u, v))
                .map(|&v| from_host[v].expect("kept endpoint"))
                .collect()
        })
        .collect();

    let sub = DartIndex::build(&rotations)
        .map_err(|e| Error::Invariant(format!("restriction broke symmetry: {e:?}")))?;
    let walks = sub.walks();
    let vertex_region: Vec<usize> = (0..n).map(|v| uf.find(fs.some_face_of_vertex(v))).collect();
    let host_region = |hu: usize| vertex_region[hu];
    let walk_region: Vec<usize> = walks
        .iter()
        .map(|w| {
            let (a, b) = sub.pair(w[0]);
            let hd = fs.darts.dart(to_host[a], to_host[b]).expect("kept dart");
            uf.find(fs.dart_face(hd))
        })
        .collect();

    let comps = loose_components(&rotations);
    let mut comp_of = vec![0; to_host.len()];
    for (ci, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = ci;
        }
    }
    let mut comp_walks: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
    let mut region_members: HashMap<usize, Vec<(usize, Option<usize>)>> = HashMap::new();
    for (wi, w) in walks.iter().enumerate() {
        let c = comp_of[sub.tail(w[0])];
        comp_walks[c].push(wi);
        region_members.entry(walk_region[wi]).or_default().push((c, Some(wi)));
    }
    for (c, comp) in comps.iter().enumerate() {
        if comp.len() == 1 && rotations[comp[0]].is_empty() {
            let r = host_region(to_host[comp[0]]);
            region_members.entry(r).or_default().push((c, None));
        }
    }

    let outer_region = uf.find(fs.outer);
    let mut placements: Vec<Option<Placement>> = vec![None; comps.len()];
    let mut queue: VecDeque<(usize, Option<usize>)> = VecDeque::from([(outer_region, None)]);
    while let Some((region, enclosing)) = queue.pop_front() {
        let Some(members) = region_members.get(&region) else { continue };
        for &(c, walk) in members {
            if placements[c].is_some() {
                continue;
            }
            let inside = enclosing.map(|w| sub.pair(walks[w][0]));
            placements[c] = Some(Placement {
                anchor: comps[c][0],
                outer: walk.map(|w| sub.pair(walks[w][0])),
                inside,
            });
            for &other in &comp_walks[c] {
                if Some(other) != walk {
                    queue.push_back((walk_region[other], Some(other)));
                }
            }
        }
    }
    let placements: Vec<Placement> = placements
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Invariant("component left unplaced by restriction".into()))?;

    let isolated: Vec<bool> = rotations.iter().map(Vec::is_empty).collect();
    let labels = g.labels().map(|l| to_host.iter().map(|&v| l[v].clone()).collect());
    let graph = PlaneGraph::with_placements(rotations, placements).with_labels(labels);
    let sub_fs = graph.face_structure()?;

    let mut face_of_region: HashMap<usize, usize> = HashMap::new();
    for (wi, w) in walks.iter().enumerate() {
        face_of_region.entry(walk_region[wi]).or_insert_with(|| sub_fs.dart_face(w[0]));
    }
    for (i, &hv) in to_host.iter().enumerate() {
        if isolated[i] {
            let r = host_region(hv);
            face_of_region.entry(r).or_insert(sub_fs.isolated_face[i]);
        }
    }
    let mut assignment = BTreeMap::new();
    for v in (0..n).filter(|&v| !keep[v]) {
        let r = host_region(v);
        let f = face_of_region.get(&r).copied().unwrap_or(sub_fs.outer);
        assignment.insert(v, f);
    }

    Ok(InducedPlaneGraph { graph, to_host, from_host, assignment })
}
