//! Primitivity of walk binomials, decided two independent ways: from the
//! block structure of the walk's subgraph, and by searching for a dominated
//! binomial directly.

use std::collections::HashSet;
use std::fmt;

use crate::binomial::{Binomial, WalkGraph};
use crate::blocks::{block_decomposition, is_cycle};
use crate::error::Error;
use crate::graph::{EdgeSubset, Graph};

/// Default cap on the support size accepted by [`is_primitive_bruteforce`].
pub const DEFAULT_BRUTEFORCE_SUPPORT_LIMIT: usize = 24;

/// Which clause of the block characterization a walk graph violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Disconnected {
        components: usize,
    },
    /// Biconnected but not an even cycle traversed once.
    NotEvenCycle,
    BlockNotCycleOrCutEdge {
        block: EdgeSubset,
    },
    /// A cycle edge traversed twice.
    DoubledCycleEdge {
        edge: usize,
    },
    /// A cut edge traversed only once.
    SingleCutEdge {
        edge: usize,
    },
    CutVertexBlockCount {
        vertex: usize,
        blocks: usize,
    },
    /// The two parts at a cut vertex carry these cyclic-edge counts, not both odd.
    EvenSplit {
        vertex: usize,
        parts: (usize, usize),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Disconnected { components } => {
                write!(f, "support has {components} components")
            }
            Violation::NotEvenCycle => f.write_str("biconnected support is not an even cycle"),
            Violation::BlockNotCycleOrCutEdge { block } => {
                write!(
                    f,
                    "block {} is neither a cycle nor a cut edge",
                    crate::io::edge_set(block)
                )
            }
            Violation::DoubledCycleEdge { edge } => {
                write!(f, "cycle edge e{} is traversed twice", edge + 1)
            }
            Violation::SingleCutEdge { edge } => {
                write!(f, "cut edge e{} is traversed once", edge + 1)
            }
            Violation::CutVertexBlockCount { vertex, blocks } => {
                write!(f, "cut vertex {} lies in {blocks} blocks", vertex + 1)
            }
            Violation::EvenSplit { vertex, parts } => write!(
                f,
                "cut vertex {} splits cyclic edges {} / {}",
                vertex + 1,
                parts.0,
                parts.1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primitivity {
    /// Support is a single even cycle.
    EvenCycle,
    /// Support is a tree of cycles and doubled cut edges meeting the
    /// odd-split condition at every cut vertex.
    BlockTree,
    NotPrimitive(Violation),
}

impl Primitivity {
    pub fn is_primitive(&self) -> bool {
        !matches!(self, Primitivity::NotPrimitive(_))
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Primitivity::NotPrimitive(v) => Some(v),
            _ => None,
        }
    }
}

/// Structural primitivity: the support is an even cycle, or it is not
/// biconnected, every block is a cycle (edges traversed once) or a cut edge
/// (traversed twice), every cut vertex lies in exactly two blocks, and the
/// two sides of each cut vertex carry an odd number of cycle edges each.
pub fn is_primitive_structural(wg: &WalkGraph, g: &Graph) -> Primitivity {
    use Primitivity::NotPrimitive;

    let support = wg.support();
    let mult = wg.multiplicity();
    let components = g.connected_components(support).len();
    if components != 1 {
        return NotPrimitive(Violation::Disconnected { components });
    }
    let decomposition = block_decomposition(g, support);
    if decomposition.blocks.len() == 1 {
        let even_cycle =
            support.len() % 2 == 0 && is_cycle(g, support) && support.iter().all(|e| mult[e] == 1);
        return if even_cycle {
            Primitivity::EvenCycle
        } else {
            NotPrimitive(Violation::NotEvenCycle)
        };
    }

    let mut cyclic = Vec::with_capacity(decomposition.blocks.len());
    for block in &decomposition.blocks {
        if block.len() == 1 {
            let edge = block.as_slice()[0];
            if mult[edge] != 2 {
                return NotPrimitive(Violation::SingleCutEdge { edge });
            }
            cyclic.push(false);
        } else if is_cycle(g, block) {
            if let Some(edge) = block.iter().find(|&e| mult[e] != 1) {
                return NotPrimitive(Violation::DoubledCycleEdge { edge });
            }
            cyclic.push(true);
        } else {
            return NotPrimitive(Violation::BlockNotCycleOrCutEdge {
                block: block.clone(),
            });
        }
    }

    let in_cycle = |e: usize| {
        decomposition
            .blocks
            .iter()
            .zip(&cyclic)
            .any(|(b, &c)| c && b.contains(e))
    };
    for &v in &decomposition.cut_vertices {
        let count = decomposition.membership[v];
        if count != 2 {
            return NotPrimitive(Violation::CutVertexBlockCount {
                vertex: v,
                blocks: count,
            });
        }
        let parts = g.components_avoiding(support, Some(v));
        debug_assert_eq!(parts.len(), 2);
        let counts: Vec<usize> = parts
            .iter()
            .map(|p| p.iter().filter(|&e| in_cycle(e)).count())
            .collect();
        if counts.iter().any(|c| c % 2 == 0) {
            return NotPrimitive(Violation::EvenSplit {
                vertex: v,
                parts: (counts[0], counts[1]),
            });
        }
    }
    Primitivity::BlockTree
}

/// Primitivity straight from the definition: no binomial `x^u' - x^v'` of the
/// ideal with `u' <= u`, `v' <= v`, other than zero and `b` itself.
///
/// Any such pair has `|u'| = |v'|` and `v' = v` forces `u' = u`, so it is
/// enough to look for a proper nonzero `v'` whose A-degree is attained by
/// some `u'`. The A-degrees of all `u'` are tabulated first.
pub fn is_primitive_bruteforce(
    b: &Binomial,
    g: &Graph,
    support_limit: usize,
) -> Result<bool, Error> {
    let support = b.support();
    if support.len() > support_limit {
        return Err(Error::SupportTooLarge {
            support: support.len(),
            limit: support_limit,
        });
    }
    let reachable: HashSet<Vec<i64>> = dominated(b.plus()).map(|u| g.a_degree(&u)).collect();
    let total: usize = b.degree();
    for v in dominated(b.minus()) {
        let size: usize = v.iter().map(|&x| usize::from(x)).sum();
        if size == 0 || size == total {
            continue;
        }
        if reachable.contains(&g.a_degree(&v)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every vector `x` with `0 <= x <= bound` componentwise.
fn dominated(bound: &[u8]) -> impl Iterator<Item = Vec<u8>> + '_ {
    let positions: Vec<usize> = (0..bound.len()).filter(|&e| bound[e] > 0).collect();
    let count: usize = positions
        .iter()
        .map(|&e| usize::from(bound[e]) + 1)
        .product();
    (0..count).map(move |mut code| {
        let mut x = vec![0u8; bound.len()];
        for &e in &positions {
            let radix = usize::from(bound[e]) + 1;
            x[e] = (code % radix) as u8;
            code /= radix;
        }
        x
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::{support_walkgraph, walk_to_binomial, Side};
    use crate::families;

    fn structural(g: &Graph, walk: &[usize]) -> Primitivity {
        let b = walk_to_binomial(g, walk).unwrap();
        is_primitive_structural(&support_walkgraph(&b).unwrap(), g)
    }

    fn brute(g: &Graph, walk: &[usize]) -> bool {
        let b = walk_to_binomial(g, walk).unwrap();
        is_primitive_bruteforce(&b, g, DEFAULT_BRUTEFORCE_SUPPORT_LIMIT).unwrap()
    }

    #[test]
    fn c4_is_primitive() {
        let g = families::cycle(4);
        assert_eq!(structural(&g, &[0, 1, 2, 3]), Primitivity::EvenCycle);
        assert!(brute(&g, &[0, 1, 2, 3]));
    }

    #[test]
    fn triforce_is_primitive() {
        let g = families::triforce();
        let walk: Vec<usize> = (0..12).collect();
        assert_eq!(structural(&g, &walk), Primitivity::BlockTree);
        assert!(brute(&g, &walk));
    }

    #[test]
    fn bowtie_is_primitive() {
        let g = families::bowtie();
        let walk = [0, 1, 2, 3, 4, 5];
        assert_eq!(structural(&g, &walk), Primitivity::BlockTree);
        assert!(brute(&g, &walk));
    }

    #[test]
    fn bridged_triangles_are_primitive() {
        let g = families::bridged_triangles();
        let walk = [0, 1, 3, 4, 5, 6, 3, 2];
        assert_eq!(structural(&g, &walk), Primitivity::BlockTree);
        assert!(brute(&g, &walk));
    }

    #[test]
    fn square_with_pendant_double_edge_fails_split() {
        // Not realisable by a balanced binomial, so only the structural test applies.
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let wg = WalkGraph::from_parts(
            5,
            &[
                (0, 1, Side::Plus),
                (1, 1, Side::Minus),
                (2, 1, Side::Plus),
                (3, 1, Side::Minus),
                (4, 2, Side::Plus),
            ],
        );
        assert_eq!(
            is_primitive_structural(&wg, &g),
            Primitivity::NotPrimitive(Violation::EvenSplit {
                vertex: 0,
                parts: (4, 0)
            })
        );
    }

    #[test]
    fn two_squares_sharing_a_vertex_are_not_primitive() {
        // 0-1-2-3-0 and 0-4-5-6-0: sum of the two quadrics.
        let g = Graph::new(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (4, 5),
                (5, 6),
                (6, 0),
            ],
        )
        .unwrap();
        let walk: Vec<usize> = (0..8).collect();
        assert!(matches!(
            structural(&g, &walk),
            Primitivity::NotPrimitive(Violation::EvenSplit { vertex: 0, .. })
        ));
        assert!(!brute(&g, &walk));
    }

    #[test]
    fn k4_product_of_two_squares_is_dominated() {
        // 0-1-2-3-0-1-3-2-0: the squares 0123 and 0132 glued along {0,1}, {2,3}
        let g = families::complete(4);
        let e = |u, v| g.edge_between(u, v).unwrap();
        let walk = [
            e(0, 1),
            e(1, 2),
            e(2, 3),
            e(3, 0),
            e(0, 1),
            e(1, 3),
            e(3, 2),
            e(2, 0),
        ];
        let b = walk_to_binomial(&g, &walk).unwrap();
        assert_eq!(b.degree(), 4);
        assert_eq!(b.plus()[e(0, 1)], 2);
        // x01*x23 - x02*x13 divides it sidewise
        assert!(!brute(&g, &walk));
        assert_eq!(
            structural(&g, &walk),
            Primitivity::NotPrimitive(Violation::NotEvenCycle)
        );
    }

    #[test]
    fn disconnected_support_is_rejected() {
        let g = Graph::new(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
            ],
        )
        .unwrap();
        let b = Binomial::new(
            &g,
            vec![1, 0, 1, 0, 1, 0, 1, 0],
            vec![0, 1, 0, 1, 0, 1, 0, 1],
        )
        .unwrap();
        let wg = support_walkgraph(&b).unwrap();
        assert_eq!(
            is_primitive_structural(&wg, &g),
            Primitivity::NotPrimitive(Violation::Disconnected { components: 2 })
        );
        assert!(!is_primitive_bruteforce(&b, &g, 24).unwrap());
    }

    #[test]
    fn c4_traversed_twice() {
        let g = families::cycle(4);
        let b = walk_to_binomial(&g, &[0, 1, 2, 3, 0, 1, 2, 3]).unwrap();
        let wg = support_walkgraph(&b).unwrap();
        assert_eq!(
            is_primitive_structural(&wg, &g),
            Primitivity::NotPrimitive(Violation::NotEvenCycle)
        );
        assert!(!is_primitive_bruteforce(&b, &g, 24).unwrap());
    }

    #[test]
    fn support_guard() {
        let g = families::cycle(30);
        let b = walk_to_binomial(&g, &(0..30).collect::<Vec<_>>()).unwrap();
        assert_eq!(
            is_primitive_bruteforce(&b, &g, 24),
            Err(Error::SupportTooLarge {
                support: 30,
                limit: 24
            })
        );
        assert!(is_primitive_bruteforce(&b, &g, 30).unwrap());
    }

    #[test]
    fn dominated_counts() {
        assert_eq!(dominated(&[2, 0, 1]).count(), 6);
        assert_eq!(dominated(&[0, 0]).count(), 1);
    }
}
