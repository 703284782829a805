use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::cycle_breaker::Color;
use crate::error::{Error, Result};
use crate::plane_graph::PlaneGraph;
use crate::union_find::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub vertices: Vec<usize>,
}

/// Blocks are ordered by their smallest edge; `links` pairs a block index with a
/// cutvertex it contains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    pub cutvertices: Vec<usize>,
    pub links: Vec<(usize, usize)>,
}

/// A maximal union of blocks glued at black cutvertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BuNode {
    pub blocks: Vec<usize>,
    pub vertices: Vec<usize>,
}

/// Tree of BU-nodes and white cutvertices (C-nodes). `links` pairs a BU-node index
/// with a C-node index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractedBcTree {
    pub nodes: Vec<BuNode>,
    pub c_nodes: Vec<usize>,
    pub links: Vec<(usize, usize)>,
}

impl ContractedBcTree {
    pub fn node_degree(&self, b: usize) -> usize {
        self.links.iter().filter(|l| l.0 == b).count()
    }
}

pub fn block_cut_tree(h: &PlaneGraph) -> Result<BlockCutTree> {
    h.check()?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let vertices: Vec<usize> = (0..h.vertex_count()).collect();
    Ok(block_cut_tree_of(&vertices, |v| h.rotation(v).to_vec()))
}

/// Block-cut tree of the subgraph induced by `vertices`, which must be connected.
pub(crate) fn block_cut_tree_of<F>(vertices: &[usize], neighbors: F) -> BlockCutTree
where
    F: Fn(usize) -> Vec<usize>,
{
    let local: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let k = vertices.len();
    let adj: Vec<Vec<usize>> = vertices
        .iter()
        .map(|&v| {
            let mut a: Vec<usize> = neighbors(v).iter().filter_map(|w| local.get(w).copied()).collect();
            a.sort_unstable();
            a
        })
        .collect();

    let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();
    if k > 0 {
        let mut disc = vec![usize::MAX; k];
        let mut low = vec![0; k];
        let mut time = 0;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut stack: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = time;
        low[0] = time;
        time += 1;
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.2 < adj[v].len() {
                let w = adj[v][top.2];
                top.2 += 1;
                if disc[w] == usize::MAX {
                    edges.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edges.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = edges.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }

    let mut out: Vec<Block> = blocks
        .into_iter()
        .map(|b| {
            let mut edges: Vec<(usize, usize)> = b
                .into_iter()
                .map(|(x, y)| {
                    let (x, y) = (vertices[x], vertices[y]);
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            let vs: BTreeSet<usize> = edges.iter().flat_map(|&(x, y)| [x, y]).collect();
            Block { edges, vertices: vs.into_iter().collect() }
        })
        .collect();
    if k == 1 {
        out.push(Block { edges: vec![], vertices: vec![vertices[0]] });
    }
    out.sort_by(|a, b| a.edges.first().cmp(&b.edges.first()));

    let mut count: HashMap<usize, usize> = HashMap::new();
    for b in &out {
        for &v in &b.vertices {
            *count.entry(v).or_default() += 1;
        }
    }
    let mut cutvertices: Vec<usize> = count.into_iter().filter(|&(_, c)| c > 1).map(|(v, _)| v).collect();
    cutvertices.sort_unstable();
    let mut links = Vec::new();
    for (bi, b) in out.iter().enumerate() {
        for &c in &cutvertices {
            if b.vertices.binary_search(&c).is_ok() {
                links.push((bi, c));
            }
        }
    }
    BlockCutTree { blocks: out, cutvertices, links }
}

/// Glues blocks at black cutvertices. Every cutvertex must be colored.
pub fn contract_bc_tree(t: &BlockCutTree, colors: &[Option<Color>]) -> Result<ContractedBcTree> {
    let color = |v: usize| colors.get(v).copied().flatten().ok_or(Error::PartialColoring(v));
    let mut uf = UnionFind::new(t.blocks.len());
    let mut by_cut: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(b, c) in &t.links {
        by_cut.entry(c).or_default().push(b);
    }
    let mut white_cuts = Vec::new();
    for &c in &t.cutvertices {
        match color(c)? {
            Color::Black => {
                let bs = &by_cut[&c];
                for w in bs.windows(2) {
                    uf.union(w[0], w[1]);
                }
            }
            Color::White => white_cuts.push(c),
        }
    }
    for b in &t.blocks {
        for &v in &b.vertices {
            color(v)?;
        }
    }
    let mut node_of_root: HashMap<usize, usize> = HashMap::new();
    let mut nodes: Vec<BuNode> = Vec::new();
    let mut node_of_block = vec![0; t.blocks.len()];
    for bi in 0..t.blocks.len() {
        let r = uf.find(bi);
        let id = *node_of_root.entry(r).or_insert_with(|| {
            nodes.push(BuNode { blocks: vec![], vertices: vec![] });
            nodes.len() - 1
        });
        node_of_block[bi] = id;
        nodes[id].blocks.push(bi);
        nodes[id].vertices.extend(t.blocks[bi].vertices.iter().copied());
    }
    for node in &mut nodes {
        node.vertices.sort_unstable();
        node.vertices.dedup();
    }
    let mut links: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (ci, &c) in white_cuts.iter().enumerate() {
        for &b in &by_cut[&c] {
            links.insert((node_of_block[b], ci));
        }
    }
    Ok(ContractedBcTree { nodes, c_nodes: white_cuts, links: links.into_iter().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two triangles sharing vertex 2 plus a pendant edge 4-5.
    fn bowtie_with_tail() -> BlockCutTree {
        let adj = |v: usize| -> Vec<usize> {
            match v {
                0 => vec![1, 2],
                1 => vec![0, 2],
                2 => vec![0, 1, 3, 4],
                3 => vec![2, 4],
                4 => vec![2, 3, 5],
                5 => vec![4],
                _ => vec![],
            }
        };
        block_cut_tree_of(&[0, 1, 2, 3, 4, 5], adj)
    }

    #[test]
    fn bowtie_blocks() {
        let t = bowtie_with_tail();
        assert_eq!(t.blocks.len(), 3);
        assert_eq!(t.cutvertices, vec![2, 4]);
        assert_eq!(t.blocks[0].vertices, vec![0, 1, 2]);
        assert_eq!(t.blocks[1].vertices, vec![2, 3, 4]);
        assert_eq!(t.blocks[2].vertices, vec![4, 5]);
        assert_eq!(t.links.len(), 4);
    }

    #[test]
    fn black_cutvertex_merges_blocks() {
        let t = bowtie_with_tail();
        let mut colors = vec![Some(Color::White); 6];
        colors[2] = Some(Color::Black);
        let c = contract_bc_tree(&t, &colors).unwrap();
        assert_eq!(c.nodes.len(), 2);
        assert_eq!(c.nodes[0].vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(c.c_nodes, vec![4]);
        assert_eq!(c.links, vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn missing_color_is_an_error() {
        let t = bowtie_with_tail();
        let colors = vec![None; 6];
        assert!(matches!(contract_bc_tree(&t, &colors), Err(Error::PartialColoring(_))));
    }

    #[test]
    fn single_vertex_is_a_block() {
        let t = block_cut_tree_of(&[7], |_| vec![]);
        assert_eq!(t.blocks.len(), 1);
        assert_eq!(t.blocks[0].vertices, vec![7]);
    }
}
