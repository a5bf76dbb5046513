//! Named graphs used by tests, benches and the CLI examples, plus a seeded
//! generator of random connected graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycle is simple for n >= 3")
}

/// `K_n` with edges in lexicographic order of `(u, v)`, `u < v`.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).expect("complete graph is simple")
}

/// Three triangles hung off the corners of a central triangle. Edge order
/// follows the 12-step walk outer(0), central 0-3, outer(3), central 3-6,
/// outer(6), central 6-0, so the central edges sit at positions 4, 8 and 12.
pub fn triforce() -> Graph {
    Graph::new(
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (0, 3),
            (3, 4),
            (4, 5),
            (5, 3),
            (3, 6),
            (6, 7),
            (7, 8),
            (8, 6),
            (6, 0),
        ],
    )
    .expect("triforce is simple")
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::new(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).expect("bowtie is simple")
}

/// Triangles `{0,1,2}` and `{3,4,5}` joined by the bridge `{2,3}` (edge 3).
pub fn bridged_triangles() -> Graph {
    Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
        .expect("bridged triangles are simple")
}

/// `k` four-cycles in a row, consecutive cycles joined by a path of
/// `path_len >= 1` edges from vertex 2 of one cycle to vertex 0 of the next.
pub fn square_chain(k: usize, path_len: usize) -> Graph {
    assert!(path_len >= 1, "squares must be joined by at least one edge");
    let mut edges = Vec::new();
    let mut next = 0;
    let mut prev_exit: Option<usize> = None;
    for _ in 0..k {
        let base = next;
        next += 4;
        if let Some(exit) = prev_exit {
            let mut at = exit;
            for _ in 0..path_len - 1 {
                edges.push((at, next));
                at = next;
                next += 1;
            }
            edges.push((at, base));
        }
        for i in 0..4 {
            edges.push((base + i, base + (i + 1) % 4));
        }
        prev_exit = Some(base + 2);
    }
    Graph::new(next, &edges).expect("square chain is simple")
}

/// Central triangle `{9,10,11}` whose corners each carry a bridge to an
/// outer triangle (`{0,1,2}`, `{3,4,5}`, `{6,7,8}`, attached at 0, 3, 6).
/// The primitive walk through every block has the central triangle pure,
/// and the outer triangles carry the smallest labels so they peel first.
pub fn bridged_triforce() -> Graph {
    let mut edges = Vec::new();
    for (base, corner) in [(0, 9), (3, 10), (6, 11)] {
        edges.extend([(base, base + 1), (base + 1, base + 2), (base + 2, base)]);
        edges.push((base, corner));
    }
    edges.extend([(9, 10), (10, 11), (11, 9)]);
    Graph::new(12, &edges).expect("bridged triforce is simple")
}

/// Random connected simple graph on `n` vertices with `m` edges
/// (`n - 1 <= m <= n(n-1)/2`), deterministic in `seed`.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Graph {
    assert!(
        n >= 1 && m + 1 >= n && m <= n * (n - 1) / 2,
        "no connected graph with n={n}, m={m}"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut present = vec![vec![false; n]; n];
    let mut edges = Vec::with_capacity(m);
    for i in 1..n {
        let u = order[i];
        let v = order[rng.gen_range(0..i)];
        present[u][v] = true;
        present[v][u] = true;
        edges.push((u, v));
    }
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !present[u][v])
        .collect();
    missing.shuffle(&mut rng);
    edges.extend(missing.into_iter().take(m + 1 - n));
    edges.shuffle(&mut rng);
    Graph::new(n, &edges).expect("generated graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_sizes() {
        let g = square_chain(3, 1);
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 14);
        let g = square_chain(2, 3);
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 11);
    }

    #[test]
    fn random_graphs_are_connected() {
        for seed in 0..20 {
            let g = random_connected(8, 12, seed);
            assert_eq!(g.edge_count(), 12);
            assert_eq!(g.connected_components(&g.full_support()).len(), 1);
        }
        assert_eq!(random_connected(6, 9, 7), random_connected(6, 9, 7));
    }
}
