use serde::{Deserialize, Serialize};

use super::{Dart, Label, PlaneGraph, Placement};
use crate::error::{Error, Result};

/// On-disk form of a plane graph.
///
/// `outer_face` is the vertex cycle of the outer face as traced, starting anywhere.
/// Components other than the one on `outer_face` either sit side by side in the outer
/// face or are described in `nesting`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneGraphFile {
    pub n: usize,
    pub rotations: Vec<Vec<usize>>,
    pub outer_face: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Label>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub nesting: Vec<NestingEntry>,
}

/// One extra component: its outward walk and the enclosing walk (`null` for the outer face).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestingEntry {
    pub outer_face: Vec<usize>,
    #[serde(default)]
    pub inside: Option<Vec<usize>>,
}

fn dart_of(cycle: &[usize]) -> Option<Dart> {
    (cycle.len() >= 2).then(|| (cycle[0], cycle[1]))
}

impl PlaneGraph {
    pub fn from_file(file: PlaneGraphFile) -> Result<Self> {
        if file.rotations.len() != file.n {
            return Err(Error::Invariant(format!(
                "n is {} but {} rotation lists were given",
                file.n,
                file.rotations.len()
            )));
        }
        let mut g = PlaneGraph::new(file.rotations, dart_of(&file.outer_face));
        if file.outer_face.len() == 1 {
            let v = file.outer_face[0];
            if v >= file.n {
                return Err(Error::VertexOutOfRange(v));
            }
        }
        for entry in &file.nesting {
            let anchor = *entry.outer_face.first().ok_or_else(|| Error::OuterFaceMismatch(vec![]))?;
            if anchor >= file.n {
                return Err(Error::VertexOutOfRange(anchor));
            }
            let comp = g.components().into_iter().find(|c| c.contains(&anchor)).unwrap_or_default();
            g.placements.retain(|p| !comp.contains(&p.anchor));
            g.placements.push(Placement {
                anchor,
                outer: dart_of(&entry.outer_face),
                inside: entry.inside.as_deref().and_then(dart_of),
            });
        }
        g.normalize_anchors();
        g = g.with_labels(file.labels);

        // Declared cycles must agree with the traced walks; skip when the graph is
        // malformed so `validate` can report the underlying problem.
        if let Ok(fs) = g.face_structure() {
            let mut declared = vec![file.outer_face.clone()];
            for e in &file.nesting {
                declared.push(e.outer_face.clone());
                declared.extend(e.inside.clone());
            }
            for cycle in declared {
                if let Some((a, b)) = dart_of(&cycle) {
                    let d = fs.darts.dart(a, b).ok_or_else(|| Error::OuterFaceMismatch(cycle.clone()))?;
                    let walk = &fs.walks[fs.walk_of[d]];
                    let start = walk.iter().position(|&x| x == d).expect("dart on its walk");
                    let traced: Vec<usize> =
                        (0..walk.len()).map(|i| fs.darts.tail(walk[(start + i) % walk.len()])).collect();
                    if traced != cycle {
                        return Err(Error::OuterFaceMismatch(cycle));
                    }
                }
            }
        }
        Ok(g)
    }

    pub fn to_file(&self) -> PlaneGraphFile {
        let cycle_from = |d: Option<Dart>, anchor: usize| -> Vec<usize> {
            let Some((a, b)) = d else { return vec![anchor] };
            let Ok(fs) = self.face_structure() else { return vec![a, b] };
            let Some(start) = fs.darts.dart(a, b) else { return vec![a, b] };
            let mut out = vec![];
            let mut cur = start;
            loop {
                out.push(fs.darts.tail(cur));
                cur = fs.darts.next_in_face(cur);
                if cur == start {
                    break;
                }
            }
            out
        };
        let primary = self
            .placements
            .iter()
            .position(|p| p.inside.is_none() && p.outer.is_some())
            .or_else(|| self.placements.iter().position(|p| p.inside.is_none()));
        let outer_face = match primary {
            Some(i) => cycle_from(self.placements[i].outer, self.placements[i].anchor),
            None => vec![],
        };
        let nesting = self
            .placements
            .iter()
            .enumerate()
            .filter(|&(i, _)| Some(i) != primary)
            .map(|(_, p)| NestingEntry {
                outer_face: cycle_from(p.outer, p.anchor),
                inside: p.inside.map(|d| cycle_from(Some(d), d.0)),
            })
            .collect();
        PlaneGraphFile {
            n: self.vertex_count(),
            rotations: self.rotations.clone(),
            outer_face,
            labels: self.labels.clone(),
            nesting,
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Self::from_file(serde_json::from_str(s)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("plane graph serializes")
    }
}
