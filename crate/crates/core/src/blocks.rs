//! Blocks (biconnected components) of an edge-induced subgraph.

use crate::graph::{EdgeSubset, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Edge sets of the blocks, ordered by smallest edge index.
    pub blocks: Vec<EdgeSubset>,
    /// Vertices lying in two or more blocks, ascending.
    pub cut_vertices: Vec<usize>,
    /// Number of blocks containing each vertex of the parent graph.
    pub membership: Vec<usize>,
}

impl BlockDecomposition {
    /// A block with a single edge is a cut edge; every other block is
    /// 2-connected.
    pub fn is_cut_edge_block(&self, block: usize) -> bool {
        self.blocks[block].len() == 1
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_at(&self, g: &Graph, v: usize) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| {
                b.iter().any(|e| {
                    let (x, y) = g.endpoints(e);
                    x == v || y == v
                })
            })
            .map(|(i, _)| i)
            .collect()
    }
}

/// Lowpoint DFS over the support, processing each connected component in turn.
pub fn block_decomposition(g: &Graph, support: &EdgeSubset) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut in_support = vec![false; g.edge_count()];
    for e in support.iter() {
        in_support[e] = true;
    }
    let adj: Vec<Vec<(usize, usize)>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&(_, e)| in_support[e])
                .collect()
        })
        .collect();

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks: Vec<EdgeSubset> = Vec::new();

    // Frame: (vertex, edge used to enter it, next adjacency position).
    let mut frames: Vec<(usize, Option<usize>, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != UNSEEN || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        frames.push((root, None, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent_edge, pos) = *frame;
            if pos < adj[v].len() {
                frame.2 += 1;
                let (w, e) = adj[v][pos];
                if Some(e) == parent_edge {
                    continue;
                }
                if disc[w] == UNSEEN {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let (Some(e), Some(&(parent, _, _))) = (parent_edge, frames.last()) {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(top) = edge_stack.pop() {
                            block.push(top);
                            if top == e {
                                break;
                            }
                        }
                        blocks.push(EdgeSubset::new(block));
                    }
                }
            }
        }
    }
    blocks.sort();

    let mut membership = vec![0; n];
    for block in &blocks {
        for v in block.vertices(g) {
            membership[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| membership[v] >= 2).collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
        membership,
    }
}

/// True when the edges form a single cycle: connected, every touched vertex
/// has degree two, and there are as many vertices as edges.
pub fn is_cycle(g: &Graph, edges: &EdgeSubset) -> bool {
    if edges.len() < 3 {
        return false;
    }
    let vertices = edges.vertices(g);
    if vertices.len() != edges.len() {
        return false;
    }
    let deg = g.degrees(edges, None);
    vertices.iter().all(|&v| deg[v] == 2) && g.connected_components(edges).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;

    #[test]
    fn cycle_is_one_block() {
        let c4 = families::cycle(4);
        let d = block_decomposition(&c4, &c4.full_support());
        assert_eq!(d.blocks, vec![c4.full_support()]);
        assert!(d.cut_vertices.is_empty());
        assert!(is_cycle(&c4, &d.blocks[0]));
    }

    #[test]
    fn bowtie_blocks() {
        let b = families::bowtie();
        let d = block_decomposition(&b, &b.full_support());
        assert_eq!(
            d.blocks,
            vec![
                EdgeSubset::new(vec![0, 1, 2]),
                EdgeSubset::new(vec![3, 4, 5])
            ]
        );
        assert_eq!(d.cut_vertices, vec![0]);
        assert_eq!(d.blocks_at(&b, 0), vec![0, 1]);
    }

    #[test]
    fn triforce_blocks() {
        let t = families::triforce();
        let d = block_decomposition(&t, &t.full_support());
        assert_eq!(d.blocks.len(), 4);
        assert!(d.blocks.iter().all(|b| is_cycle(&t, b)));
        assert!(d.blocks.contains(&EdgeSubset::new(vec![3, 7, 11])));
        assert_eq!(d.cut_vertices, vec![0, 3, 6]);
    }

    #[test]
    fn bridge_is_its_own_block() {
        let g = families::bridged_triangles();
        let d = block_decomposition(&g, &g.full_support());
        assert_eq!(d.blocks.len(), 3);
        assert!(d.is_cut_edge_block(1));
        assert_eq!(d.blocks[1], EdgeSubset::new(vec![3]));
        assert_eq!(d.cut_vertices, vec![2, 3]);
    }

    #[test]
    fn disconnected_support_is_decomposed_per_component() {
        let t = families::triforce();
        let outer: EdgeSubset = (0..12).filter(|e| ![3, 7, 11].contains(e)).collect();
        let d = block_decomposition(&t, &outer);
        assert_eq!(d.blocks.len(), 3);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn k4_is_biconnected() {
        let k4 = families::complete(4);
        let d = block_decomposition(&k4, &k4.full_support());
        assert_eq!(d.blocks.len(), 1);
        assert!(!is_cycle(&k4, &d.blocks[0]));
    }

    /// Cut vertices by definition: removing the vertex raises the number of
    /// components of the support.
    fn cut_vertices_by_removal(g: &Graph, support: &EdgeSubset) -> Vec<usize> {
        let base = g.connected_components(support).len();
        let mut out = Vec::new();
        for v in support.vertices(g) {
            let rest: EdgeSubset = support
                .iter()
                .filter(|&e| {
                    let (a, b) = g.endpoints(e);
                    a != v && b != v
                })
                .collect();
            let mut comps = g.connected_components(&rest).len();
            // vertices that lose all their edges become isolated components
            let touched = support.vertices(g);
            let remaining = rest.vertices(g);
            comps += touched
                .iter()
                .filter(|&&u| u != v && !remaining.contains(&u))
                .count();
            if comps > base {
                out.push(v);
            }
        }
        out
    }

    proptest! {
        #[test]
        fn blocks_partition_and_cut_vertices_match(n in 4usize..9, extra in 0usize..8, seed in any::<u64>(), mask in any::<u32>()) {
            let m = (n - 1 + extra).min(n * (n - 1) / 2);
            let g = families::random_connected(n, m, seed);
            let support: EdgeSubset = (0..m).filter(|e| mask >> (e % 32) & 1 == 1).collect();
            let d = block_decomposition(&g, &support);

            let mut all: Vec<usize> = d.blocks.iter().flat_map(|b| b.iter()).collect();
            all.sort_unstable();
            prop_assert_eq!(all, support.as_slice().to_vec());

            prop_assert_eq!(d.cut_vertices.clone(), cut_vertices_by_removal(&g, &support));

            for b in &d.blocks {
                if b.len() > 1 {
                    prop_assert_eq!(block_decomposition(&g, b).blocks.len(), 1);
                }
            }
        }

        #[test]
        fn cycles_are_single_blocks(n in 3usize..12) {
            let g = families::cycle(n);
            let d = block_decomposition(&g, &g.full_support());
            prop_assert_eq!(d.blocks, vec![g.full_support()]);
        }
    }
}
