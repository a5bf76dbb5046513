//! Graver bases of toric ideals of small graphs, by exhaustive search over
//! even closed walks.
//!
//! A closed walk of length `2d` yields the binomial `E+(w) - E-(w)` of degree
//! `d`; every primitive binomial arises this way with each edge used at most
//! twice, and its degree is at most `n - 2` for `n >= 4` vertices. The search
//! assigns each edge a side the first time it is used and abandons the branch
//! as soon as an edge would land on both sides, since such a walk can only
//! close into a reducible binomial.

use std::collections::{BTreeMap, HashSet};
use std::sync::atomic::{AtomicU64, Ordering};

use crate::binomial::{support_walkgraph, Binomial};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par::{self, Execution};
use crate::primitive::{is_primitive_structural, DEFAULT_BRUTEFORCE_SUPPORT_LIMIT};

/// Bounds for the walk search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Largest binomial degree searched; walks have length at most twice this.
    pub max_degree: usize,
    /// Cap on the number of walk states explored over the whole search.
    pub max_walks: u64,
    /// Largest support handed to the brute-force primitivity oracle.
    pub max_support_edges: usize,
}

impl EnumerationLimits {
    pub const DEFAULT_MAX_WALKS: u64 = 2_000_000_000;

    /// `max_degree = n - 2` for `n >= 4`, else 2.
    pub fn for_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        Self {
            max_degree: if n >= 4 { n - 2 } else { 2 },
            max_walks: Self::DEFAULT_MAX_WALKS,
            max_support_edges: DEFAULT_BRUTEFORCE_SUPPORT_LIMIT,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Enumerated,
    Imported,
}

/// Canonical, duplicate-free, sorted collection of binomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSet {
    elements: Vec<Binomial>,
    source: Source,
}

impl BasisSet {
    pub fn new(elements: impl IntoIterator<Item = Binomial>, source: Source) -> Self {
        let mut elements: Vec<Binomial> =
            elements.into_iter().map(Binomial::canonicalize).collect();
        elements.sort();
        elements.dedup();
        Self { elements, source }
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Binomial> {
        self.elements.iter()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn source(&self) -> Source {
        self.source
    }

    /// Membership up to sign.
    pub fn contains(&self, b: &Binomial) -> bool {
        self.elements
            .binary_search(&b.clone().canonicalize())
            .is_ok()
    }

    pub fn into_elements(self) -> Vec<Binomial> {
        self.elements
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.elements.iter().map(Binomial::degree).max()
    }
}

impl<'a> IntoIterator for &'a BasisSet {
    type Item = &'a Binomial;
    type IntoIter = std::slice::Iter<'a, Binomial>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

pub fn degree_histogram(basis: &BasisSet) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for b in basis {
        *hist.entry(b.degree()).or_insert(0) += 1;
    }
    hist
}

/// Every irreducible binomial of an even closed walk of length at most
/// `2 * limits.max_degree` using no edge more than twice.
pub fn enumerate_walk_binomials(g: &Graph, limits: &EnumerationLimits) -> Result<BasisSet> {
    enumerate_walk_binomials_with(g, limits, Execution::default())
}

pub fn enumerate_walk_binomials_with(
    g: &Graph,
    limits: &EnumerationLimits,
    exec: Execution,
) -> Result<BasisSet> {
    search(g, limits, None, exec)
}

/// The Graver basis: enumerated walk binomials passing the structural
/// primitivity test.
///
/// The search here additionally caps every vertex at four edge incidences
/// (with multiplicity). In a primitive walk each vertex lies in at most two
/// blocks, each contributing two incidences, so no primitive binomial is
/// lost.
pub fn graver_basis(g: &Graph, limits: &EnumerationLimits) -> Result<BasisSet> {
    graver_basis_with(g, limits, Execution::default())
}

pub fn graver_basis_with(
    g: &Graph,
    limits: &EnumerationLimits,
    exec: Execution,
) -> Result<BasisSet> {
    let candidates = search(g, limits, Some(4), exec)?;
    Ok(primitive_subset(g, candidates, exec))
}

/// Keeps the elements that pass the structural primitivity test.
pub fn primitive_subset(g: &Graph, candidates: BasisSet, exec: Execution) -> BasisSet {
    let source = candidates.source();
    let keep = par::map(exec, candidates.elements(), |b| {
        support_walkgraph(b).is_ok_and(|wg| is_primitive_structural(&wg, g).is_primitive())
    });
    let elements = candidates
        .into_elements()
        .into_iter()
        .zip(keep)
        .filter_map(|(b, k)| k.then_some(b));
    BasisSet::new(elements, source)
}

struct Budget {
    cap: u64,
    used: AtomicU64,
}

impl Budget {
    const FLUSH: u64 = 1 << 12;

    fn add(&self, n: u64) -> bool {
        self.used.fetch_add(n, Ordering::Relaxed) + n <= self.cap
    }
}

struct Exhausted;

fn search(
    g: &Graph,
    limits: &EnumerationLimits,
    max_load: Option<u8>,
    exec: Execution,
) -> Result<BasisSet> {
    let n = g.vertex_count();
    let max_len = 2 * limits.max_degree;
    let budget = Budget {
        cap: limits.max_walks,
        used: AtomicU64::new(0),
    };

    let distances: Vec<Vec<usize>> = (0..n).map(|s| distances_above(g, s)).collect();
    let mut tasks = Vec::new();
    for start in 0..n {
        for &(w, e) in g.neighbors(start) {
            if w > start {
                tasks.push((start, w, e));
            }
        }
    }

    let results = par::map(exec, &tasks, |&(start, w, e)| {
        let mut s = WalkSearch {
            g,
            start,
            max_len,
            dist: &distances[start],
            max_load,
            plus: vec![0; g.edge_count()],
            minus: vec![0; g.edge_count()],
            load: vec![0; n],
            first_edge: e,
            len: 0,
            pending: 0,
            budget: &budget,
            found: HashSet::new(),
        };
        s.push(start, w, e);
        let outcome = s.extend(w, e);
        let flushed = s.budget.add(s.pending);
        match outcome {
            Ok(()) if flushed => Ok(s.found),
            _ => Err(Exhausted),
        }
    });

    let mut all = HashSet::new();
    for r in results {
        match r {
            Ok(found) => all.extend(found),
            Err(Exhausted) => {
                return Err(Error::LimitExceeded {
                    max_walks: limits.max_walks,
                })
            }
        }
    }
    if budget.used.load(Ordering::Relaxed) > limits.max_walks {
        return Err(Error::LimitExceeded {
            max_walks: limits.max_walks,
        });
    }
    Ok(BasisSet::new(all, Source::Enumerated))
}

/// BFS distances to `start` inside the subgraph induced on vertices `>= start`.
fn distances_above(g: &Graph, start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = std::collections::VecDeque::from([start]);
    dist[start] = 0;
    while let Some(v) = queue.pop_front() {
        for &(w, _) in g.neighbors(v) {
            if w >= start && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Depth-first search over closed walks whose smallest vertex is `start` and
/// whose first edge is `first_edge`.
struct WalkSearch<'a> {
    g: &'a Graph,
    start: usize,
    max_len: usize,
    dist: &'a [usize],
    max_load: Option<u8>,
    plus: Vec<u8>,
    minus: Vec<u8>,
    load: Vec<u8>,
    first_edge: usize,
    len: usize,
    pending: u64,
    budget: &'a Budget,
    found: HashSet<Binomial>,
}

impl WalkSearch<'_> {
    fn push(&mut self, v: usize, w: usize, e: usize) {
        if self.len % 2 == 0 {
            self.plus[e] += 1;
        } else {
            self.minus[e] += 1;
        }
        self.load[v] += 1;
        self.load[w] += 1;
        self.len += 1;
    }

    fn pop(&mut self, v: usize, w: usize, e: usize) {
        self.len -= 1;
        if self.len % 2 == 0 {
            self.plus[e] -= 1;
        } else {
            self.minus[e] -= 1;
        }
        self.load[v] -= 1;
        self.load[w] -= 1;
    }

    fn extend(&mut self, v: usize, last_edge: usize) -> Result<(), Exhausted> {
        self.pending += 1;
        if self.pending == Budget::FLUSH {
            self.pending = 0;
            if !self.budget.add(Budget::FLUSH) {
                return Err(Exhausted);
            }
        }

        // A walk and its reversal give the same binomial up to sign; keep the
        // orientation whose first edge is smaller than its last.
        if v == self.start && self.len % 2 == 0 && last_edge > self.first_edge {
            let b = Binomial::from_walk_parts(self.plus.clone(), self.minus.clone()).canonicalize();
            self.found.insert(b);
        }
        if self.len == self.max_len {
            return Ok(());
        }

        let remaining = self.max_len - self.len - 1;
        let on_plus = self.len % 2 == 0;
        let g = self.g;
        for &(w, e) in g.neighbors(v) {
            if w < self.start || self.dist[w] > remaining {
                continue;
            }
            let (same, other) = if on_plus {
                (self.plus[e], self.minus[e])
            } else {
                (self.minus[e], self.plus[e])
            };
            if other > 0 || same >= 2 {
                continue;
            }
            if let Some(cap) = self.max_load {
                if self.load[v] >= cap || self.load[w] >= cap {
                    continue;
                }
            }
            self.push(v, w, e);
            let r = self.extend(w, e);
            self.pop(v, w, e);
            r?;
        }
        Ok(())
    }
}
