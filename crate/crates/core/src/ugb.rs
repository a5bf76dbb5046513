//! Universal Gröbner basis membership for Graver elements.
//!
//! A primitive walk's binomial lies in the universal Gröbner basis exactly
//! when the walk is mixed: none of its cycles has all edges on one side.
//! [`filter_element`] decides this by repeatedly tracing from a degree-two
//! vertex of the walk's subgraph, cutting off either a cycle (tested for
//! purity, then deleted) or a dangling run of cut edges, until only isolated
//! cut edges remain. [`is_mixed_blocks`] and [`is_mixed_forest`] decide the
//! same property from the block decomposition and from acyclicity of each
//! side, and serve as oracles for the peeling procedure.

use std::fmt;

use crate::binomial::{support_walkgraph, Binomial, Side};
use crate::blocks::block_decomposition;
use crate::error::{Error, Result};
use crate::graph::{DisjointSets, EdgeSubset, Graph};
use crate::graver::BasisSet;
use crate::io;
use crate::par::{self, Execution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    Rejected,
}

/// What the peeling procedure did to one binomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterTrace {
    /// Mixed cycles, in deletion order.
    pub peeled_cycles: Vec<EdgeSubset>,
    /// Runs of cut edges, in deletion order.
    pub deleted_cut_edges: Vec<EdgeSubset>,
    pub verdict: Verdict,
    /// The pure cycle that stopped the procedure, and the side holding it.
    pub rejecting_cycle: Option<(EdgeSubset, Side)>,
    /// Elementary operations performed: vertex scans, adjacency probes,
    /// trail lookups, purity checks and deletions.
    pub step_count: u64,
}

impl FilterTrace {
    pub fn is_accepted(&self) -> bool {
        self.verdict == Verdict::Accepted
    }
}

/// Human-readable certificate, e.g. `{e4,e8,e12} ⊆ w⁻`.
pub struct Certificate<'a>(pub &'a EdgeSubset, pub Side);

impl fmt::Display for Certificate<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊆ {}", io::edge_set(self.0), self.1)
    }
}

enum TraceEnd {
    /// The trail closed on the vertex first stored at this position.
    Cycle(usize),
    /// The trail reached a vertex of degree one.
    Dangling,
}

/// Decides membership of `b` in the universal Gröbner basis by cycle peeling.
///
/// The start vertex is the smallest one of degree two in the remaining
/// support; each step moves to the smallest neighbor other than the one just
/// left. Backtracking from a degree-one end stops at the first vertex of
/// degree three or more, or at the start of the trail. When no degree-two
/// vertex is left but a vertex of degree three or more is, tracing starts
/// there instead, which clears pendant cut edges off a cycle whose
/// every vertex still carries one.
///
/// The verdict is only meaningful for primitive `b`.
pub fn filter_element(b: &Binomial, g: &Graph) -> Result<FilterTrace> {
    let wg = support_walkgraph(b).map_err(Error::MalformedInput)?;
    let support = wg.support();
    let vertices = support.vertices(g);
    let mut alive = vec![false; g.edge_count()];
    for e in support.iter() {
        alive[e] = true;
    }
    let mut deg = g.degrees(support, None);

    let mut trace = FilterTrace {
        peeled_cycles: Vec::new(),
        deleted_cut_edges: Vec::new(),
        verdict: Verdict::Accepted,
        rejecting_cycle: None,
        step_count: 0,
    };
    let mut steps: u64 = 0;
    // trail[k] is the k-th vertex visited; trail_edges[k] joins trail[k] and trail[k+1]
    let mut trail: Vec<usize> = Vec::new();
    let mut trail_edges: Vec<usize> = Vec::new();

    loop {
        let mut two = None;
        let mut high = None;
        for &v in &vertices {
            steps += 1;
            if deg[v] == 2 {
                two = Some(v);
                break;
            }
            if deg[v] >= 3 && high.is_none() {
                high = Some(v);
            }
        }
        let Some(start) = two.or(high) else {
            // only isolated cut edges are left
            break;
        };

        steps += trail.len() as u64;
        trail.clear();
        trail_edges.clear();
        trail.push(start);

        let end = loop {
            let at = trail[trail.len() - 1];
            let prev = trail.len().checked_sub(2).map(|k| trail[k]);
            let mut next = None;
            for &(w, e) in g.neighbors(at) {
                steps += 1;
                if alive[e] && Some(w) != prev {
                    next = Some((w, e));
                    break;
                }
            }
            let (j, e) = next.expect("a trail vertex of degree >= 2 has an onward edge");
            steps += trail.len() as u64;
            let seen = trail.iter().position(|&x| x == j);
            trail.push(j);
            trail_edges.push(e);
            if let Some(first) = seen {
                break TraceEnd::Cycle(first);
            }
            if deg[j] == 1 {
                break TraceEnd::Dangling;
            }
        };

        let mut removed = Vec::new();
        let mut r = trail.len() - 1;
        match end {
            TraceEnd::Dangling => {
                loop {
                    removed.push(trail_edges[r - 1]);
                    r -= 1;
                    steps += 1;
                    if deg[trail[r]] >= 3 || r == 0 {
                        break;
                    }
                }
                trace
                    .deleted_cut_edges
                    .push(EdgeSubset::new(removed.clone()));
            }
            TraceEnd::Cycle(first) => {
                while r > first {
                    removed.push(trail_edges[r - 1]);
                    r -= 1;
                    steps += 1;
                }
                steps += removed.len() as u64;
                let side = wg.parity(removed[0]).expect("support edge has a side");
                let cycle = EdgeSubset::new(removed.clone());
                if removed.iter().all(|&e| wg.parity(e) == Some(side)) {
                    trace.verdict = Verdict::Rejected;
                    trace.rejecting_cycle = Some((cycle, side));
                    trace.step_count = steps;
                    return Ok(trace);
                }
                trace.peeled_cycles.push(cycle);
            }
        }

        for &e in &removed {
            steps += 1;
            alive[e] = false;
            let (x, y) = g.endpoints(e);
            deg[x] -= 1;
            deg[y] -= 1;
        }
    }

    trace.step_count = steps;
    Ok(trace)
}

/// Result of the block-based mixedness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mixedness {
    Mixed,
    /// First cyclic block (by smallest edge) lying entirely on one side.
    Pure {
        block: EdgeSubset,
        side: Side,
    },
}

impl Mixedness {
    pub fn is_mixed(&self) -> bool {
        matches!(self, Mixedness::Mixed)
    }
}

/// Mixed iff every cyclic block of the support has edges on both sides.
pub fn is_mixed_blocks(b: &Binomial, g: &Graph) -> Mixedness {
    let decomposition = block_decomposition(g, &b.support());
    for block in decomposition.blocks.iter().filter(|blk| blk.len() > 1) {
        let mut sides = block.iter().filter_map(|e| b.side_of(e));
        let first = sides.next().expect("block edges lie in the support");
        if sides.all(|s| s == first) {
            return Mixedness::Pure {
                block: block.clone(),
                side: first,
            };
        }
    }
    Mixedness::Mixed
}

/// Mixed iff neither the plus edges nor the minus edges contain a cycle.
pub fn is_mixed_forest(b: &Binomial, g: &Graph) -> bool {
    [Side::Plus, Side::Minus].into_iter().all(|side| {
        let mut dsu = DisjointSets::new(g.vertex_count());
        (0..b.edge_count())
            .filter(|&e| b.side_of(e) == Some(side))
            .all(|e| {
                let (x, y) = g.endpoints(e);
                dsu.union(x, y)
            })
    })
}

/// The elements of `basis` accepted by [`filter_element`], with one trace per
/// input element. With `verify` set, every element is also checked against
/// both oracles and any disagreement is an [`Error::OracleMismatch`].
pub fn universal_groebner_basis(
    basis: &BasisSet,
    g: &Graph,
    verify: bool,
) -> Result<(BasisSet, Vec<FilterTrace>)> {
    universal_groebner_basis_with(basis, g, verify, Execution::default())
}

pub fn universal_groebner_basis_with(
    basis: &BasisSet,
    g: &Graph,
    verify: bool,
    exec: Execution,
) -> Result<(BasisSet, Vec<FilterTrace>)> {
    let results = par::map(exec, basis.elements(), |b| -> Result<FilterTrace> {
        let trace = filter_element(b, g)?;
        if verify {
            check_agreement(b, g, &trace)?;
        }
        Ok(trace)
    });
    let traces = results.into_iter().collect::<Result<Vec<_>>>()?;
    let accepted = basis
        .iter()
        .zip(&traces)
        .filter(|(_, t)| t.is_accepted())
        .map(|(b, _)| b.clone());
    Ok((BasisSet::new(accepted, basis.source()), traces))
}

pub(crate) fn check_agreement(b: &Binomial, g: &Graph, trace: &FilterTrace) -> Result<()> {
    let peel = trace.is_accepted();
    let blocks = is_mixed_blocks(b, g).is_mixed();
    let forest = is_mixed_forest(b, g);
    if peel == blocks && blocks == forest {
        Ok(())
    } else {
        Err(Error::OracleMismatch {
            binomial: io::format_monomial(b),
            detail: format!("peeling {peel}, blocks {blocks}, forest {forest}"),
        })
    }
}
