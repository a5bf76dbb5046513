//! Binomials `x^u - x^v` of the toric ideal of a graph and the walks that
//! produce them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{BinomialError, WalkError};
use crate::graph::{EdgeSubset, Graph};

/// The two parity classes of a walk's edges: odd positions multiply into the
/// plus monomial, even positions into the minus monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Plus => "w⁺",
            Side::Minus => "w⁻",
        })
    }
}

/// A binomial with disjoint supports and balanced A-degree. Ordering is by
/// degree, then lexicographically by the plus vector, then the minus vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    degree: usize,
    plus: Vec<u8>,
    minus: Vec<u8>,
}

impl Binomial {
    /// Validates disjoint supports, equal degrees and A-degree balance
    /// against `g`. Exponents above 2 are accepted here and rejected where
    /// a walk structure is required.
    pub fn new(g: &Graph, plus: Vec<u8>, minus: Vec<u8>) -> Result<Self, BinomialError> {
        let m = g.edge_count();
        for len in [plus.len(), minus.len()] {
            if len != m {
                return Err(BinomialError::DimensionMismatch {
                    expected: m,
                    found: len,
                });
            }
        }
        if let Some(edge) = (0..m).find(|&e| plus[e] > 0 && minus[e] > 0) {
            return Err(BinomialError::CommonFactor { edge });
        }
        let dp: usize = plus.iter().map(|&x| usize::from(x)).sum();
        let dm: usize = minus.iter().map(|&x| usize::from(x)).sum();
        if dp == 0 && dm == 0 {
            return Err(BinomialError::Zero);
        }
        let (ap, am) = (g.a_degree(&plus), g.a_degree(&minus));
        if let Some(vertex) = (0..g.vertex_count()).find(|&v| ap[v] != am[v]) {
            return Err(BinomialError::Unbalanced { vertex });
        }
        // balance at every vertex already forces equal degrees
        debug_assert_eq!(dp, dm);
        Ok(Self {
            degree: dp,
            plus,
            minus,
        })
    }

    /// Trusted constructor for vectors produced by a walk.
    pub(crate) fn from_walk_parts(plus: Vec<u8>, minus: Vec<u8>) -> Self {
        let degree = plus.iter().map(|&x| usize::from(x)).sum();
        Self {
            degree,
            plus,
            minus,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Length of any walk producing this binomial: twice the degree.
    pub fn walk_length(&self) -> usize {
        2 * self.degree
    }

    pub fn plus(&self) -> &[u8] {
        &self.plus
    }

    pub fn minus(&self) -> &[u8] {
        &self.minus
    }

    pub fn edge_count(&self) -> usize {
        self.plus.len()
    }

    pub fn support(&self) -> EdgeSubset {
        (0..self.plus.len())
            .filter(|&e| self.plus[e] + self.minus[e] > 0)
            .collect()
    }

    pub fn side_of(&self, edge: usize) -> Option<Side> {
        if self.plus[edge] > 0 {
            Some(Side::Plus)
        } else if self.minus[edge] > 0 {
            Some(Side::Minus)
        } else {
            None
        }
    }

    pub fn negated(&self) -> Binomial {
        Self {
            degree: self.degree,
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// Representative of `{B, -B}`: the side that is lexicographically larger
    /// becomes the plus side. Because supports are disjoint this is the side
    /// holding the smallest support edge.
    pub fn canonicalize(self) -> Binomial {
        if self.minus.cmp(&self.plus) == Ordering::Greater {
            self.negated()
        } else {
            self
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.plus >= self.minus
    }

    /// Signed row `u_plus - u_minus`.
    pub fn signed_row(&self) -> Vec<i32> {
        self.plus
            .iter()
            .zip(&self.minus)
            .map(|(&p, &m)| i32::from(p) - i32::from(m))
            .collect()
    }
}

/// Binomial `E+(w) - E-(w)` of a closed walk given as edge indices.
pub fn walk_to_binomial(g: &Graph, walk: &[usize]) -> Result<Binomial, WalkError> {
    if walk.is_empty() {
        return Err(WalkError::Empty);
    }
    if walk.len() % 2 == 1 {
        return Err(WalkError::OddLength(walk.len()));
    }
    let m = g.edge_count();
    if let Some((position, &edge)) = walk.iter().enumerate().find(|(_, &e)| e >= m) {
        return Err(WalkError::EdgeOutOfRange { position, edge });
    }

    // Try both orientations of the first edge; keep the one that gets furthest.
    let (a, b) = g.endpoints(walk[0]);
    let mut best: Option<WalkError> = None;
    for start in [a, b] {
        match trace(g, walk, start) {
            Ok(()) => {
                best = None;
                break;
            }
            Err(err) => {
                let better = match (&best, &err) {
                    (None, _) => true,
                    (
                        Some(WalkError::NotAWalk { position: p }),
                        WalkError::NotAWalk { position: q },
                    ) => q > p,
                    (Some(WalkError::NotAWalk { .. }), WalkError::NotClosed) => true,
                    _ => false,
                };
                if better {
                    best = Some(err);
                }
            }
        }
    }
    if let Some(err) = best {
        return Err(err);
    }

    let mut plus = vec![0u8; m];
    let mut minus = vec![0u8; m];
    for (i, &e) in walk.iter().enumerate() {
        let slot = if i % 2 == 0 {
            &mut plus[e]
        } else {
            &mut minus[e]
        };
        *slot = slot.saturating_add(1);
    }
    if let Some(edge) = (0..m).find(|&e| plus[e] > 0 && minus[e] > 0) {
        return Err(WalkError::ReducibleBinomial { edge });
    }
    Ok(Binomial::from_walk_parts(plus, minus))
}

fn trace(g: &Graph, walk: &[usize], start: usize) -> Result<(), WalkError> {
    let mut at = start;
    for (position, &e) in walk.iter().enumerate() {
        at = g.other_end(e, at).ok_or(WalkError::NotAWalk { position })?;
    }
    if at == start {
        Ok(())
    } else {
        Err(WalkError::NotClosed)
    }
}

/// The subgraph of a walk: its edges, how often each is traversed, and which
/// parity class each belongs to. Indexed by parent-graph edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkGraph {
    support: EdgeSubset,
    multiplicity: Vec<u8>,
    parity: Vec<Option<Side>>,
}

impl WalkGraph {
    /// Builds a walk graph from `(edge, multiplicity, side)` triples over a
    /// graph with `edge_count` edges.
    pub fn from_parts(edge_count: usize, parts: &[(usize, u8, Side)]) -> Self {
        let mut multiplicity = vec![0; edge_count];
        let mut parity = vec![None; edge_count];
        for &(e, k, side) in parts {
            multiplicity[e] = k;
            parity[e] = Some(side);
        }
        let support = parts.iter().map(|p| p.0).collect();
        Self {
            support,
            multiplicity,
            parity,
        }
    }

    pub fn support(&self) -> &EdgeSubset {
        &self.support
    }

    pub fn multiplicity(&self) -> &[u8] {
        &self.multiplicity
    }

    pub fn parity(&self, edge: usize) -> Option<Side> {
        self.parity[edge]
    }

    pub fn edges_on(&self, side: Side) -> EdgeSubset {
        self.support
            .iter()
            .filter(|&e| self.parity[e] == Some(side))
            .collect()
    }
}

pub fn support_walkgraph(b: &Binomial) -> Result<WalkGraph, BinomialError> {
    let m = b.edge_count();
    let mut parts = Vec::new();
    for e in 0..m {
        let (k, side) = match (b.plus[e], b.minus[e]) {
            (0, 0) => continue,
            (k, 0) => (k, Side::Plus),
            (0, k) => (k, Side::Minus),
            _ => return Err(BinomialError::CommonFactor { edge: e }),
        };
        if k > 2 {
            return Err(BinomialError::ExponentTooLarge {
                edge: e,
                exponent: k,
            });
        }
        parts.push((e, k, side));
    }
    Ok(WalkGraph::from_parts(m, &parts))
}
