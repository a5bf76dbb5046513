//! Simple undirected graphs with indexed edges.
//!
//! Vertices and edges are 0-based here; the I/O layer converts to the 1-based
//! `e1..em` labels used in human-readable output.

use std::collections::HashMap;

use crate::error::GraphError;

/// A finite simple undirected graph. Edge `i` is the `i`-th pair passed to
/// [`Graph::new`]; edge indices are stable identifiers for every subset and
/// exponent vector built on top of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen: HashMap<(usize, usize), usize> = HashMap::with_capacity(edge_list.len());
        let mut adjacency = vec![Vec::new(); n];
        let mut edges = Vec::with_capacity(edge_list.len());
        for (edge, &(u, v)) in edge_list.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge });
            }
            let key = (u.min(v), u.max(v));
            if let Some(&first) = seen.get(&key) {
                return Err(GraphError::DuplicateEdge { edge, first });
            }
            seen.insert(key, edge);
            adjacency[u].push((v, edge));
            adjacency[v].push((u, edge));
            edges.push((u, v));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(neighbor, edge)` pairs sorted by neighbor index.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    /// The endpoint of `edge` that is not `v`, if `v` is an endpoint at all.
    pub fn other_end(&self, edge: usize, v: usize) -> Option<usize> {
        let (a, b) = self.edges[edge];
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let list = &self.adjacency[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    /// Column `a_e` of the configuration `A_G`: ones at both endpoints of `edge`.
    pub fn incidence_vector(&self, edge: usize) -> Vec<i64> {
        let mut a = vec![0; self.n];
        let (u, v) = self.edges[edge];
        a[u] = 1;
        a[v] = 1;
        a
    }

    /// `sum_e exps[e] * a_e`.
    pub fn a_degree(&self, exps: &[u8]) -> Vec<i64> {
        let mut d = vec![0; self.n];
        for (e, &x) in exps.iter().enumerate() {
            if x > 0 {
                let (u, v) = self.edges[e];
                d[u] += i64::from(x);
                d[v] += i64::from(x);
            }
        }
        d
    }

    pub fn full_support(&self) -> EdgeSubset {
        EdgeSubset((0..self.edges.len()).collect())
    }

    /// Vertex degrees of the sub-multigraph on `support`, counting each edge
    /// `multiplicity[e]` times when a multiplicity map is given.
    pub fn degrees(&self, support: &EdgeSubset, multiplicity: Option<&[u8]>) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in support.iter() {
            let k = multiplicity.map_or(1, |m| usize::from(m[e]));
            let (u, v) = self.edges[e];
            deg[u] += k;
            deg[v] += k;
        }
        deg
    }

    /// Edge sets of the connected components of `support`, ordered by their
    /// smallest edge. Isolated vertices are ignored.
    pub fn connected_components(&self, support: &EdgeSubset) -> Vec<EdgeSubset> {
        self.components_avoiding(support, None)
    }

    /// Components of `support` after splitting `blocked` into one copy per
    /// incident edge, so that paths may end at `blocked` but never pass it.
    pub(crate) fn components_avoiding(
        &self,
        support: &EdgeSubset,
        blocked: Option<usize>,
    ) -> Vec<EdgeSubset> {
        let mut dsu = DisjointSets::new(self.edges.len());
        let mut first_edge_at: Vec<Option<usize>> = vec![None; self.n];
        for e in support.iter() {
            let (u, v) = self.edges[e];
            for w in [u, v] {
                if Some(w) == blocked {
                    continue;
                }
                match first_edge_at[w] {
                    Some(f) => {
                        dsu.union(f, e);
                    }
                    None => first_edge_at[w] = Some(e),
                }
            }
        }
        let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for e in support.iter() {
            let root = dsu.find(e);
            let idx = *slot.entry(root).or_insert_with(|| {
                groups.push((root, Vec::new()));
                groups.len() - 1
            });
            groups[idx].1.push(e);
        }
        groups.into_iter().map(|(_, es)| EdgeSubset(es)).collect()
    }
}

/// Sorted, duplicate-free set of edge indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeSubset(Vec<usize>);

impl EdgeSubset {
    pub fn new(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Self(edges)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.0.binary_search(&edge).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_subset(&self, other: &EdgeSubset) -> bool {
        self.0.iter().all(|&e| other.contains(e))
    }

    /// Vertices touched by the edges, ascending.
    pub fn vertices(&self, g: &Graph) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .iter()
            .flat_map(|e| {
                let (u, v) = g.endpoints(e);
                [u, v]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

impl FromIterator<usize> for EdgeSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(len: usize) -> Self {
        Self {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub(crate) fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Returns `false` when `i` and `j` were already in one set.
    pub(crate) fn union(&mut self, i: usize, j: usize) -> bool {
        let (mut a, mut b) = (self.find(i), self.find(j));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }
}
