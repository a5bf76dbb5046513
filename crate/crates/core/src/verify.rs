//! Cross-checks between the independent decision procedures.

use crate::binomial::{support_walkgraph, Binomial};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graver::{
    enumerate_walk_binomials_with, graver_basis_with, primitive_subset, BasisSet, EnumerationLimits,
};
use crate::io::format_monomial;
use crate::par::{self, Execution};
use crate::primitive::{is_primitive_bruteforce, is_primitive_structural};
use crate::ugb::{check_agreement, filter_element};

/// Counts from a successful cross-check of one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// Irreducible walk binomials found by the unpruned search.
    pub irreducible: usize,
    /// Of those, the primitive ones.
    pub primitive: usize,
    /// Of those, the ones in the universal Gröbner basis.
    pub ugb: usize,
    /// Candidates whose support exceeded the brute-force limit.
    pub bruteforce_skipped: usize,
}

/// Structural vs. brute-force primitivity on every candidate whose support is
/// within `support_limit`. Returns the primitive subset, or the first
/// disagreement in canonical order.
pub fn check_primitivity(
    g: &Graph,
    candidates: &BasisSet,
    support_limit: usize,
    exec: Execution,
) -> Result<(Vec<Binomial>, usize)> {
    let outcomes = par::map(exec, candidates.elements(), |b| -> Result<Option<bool>> {
        let wg = support_walkgraph(b).map_err(Error::MalformedInput)?;
        let structural = is_primitive_structural(&wg, g).is_primitive();
        match is_primitive_bruteforce(b, g, support_limit) {
            Ok(brute) if brute == structural => Ok(Some(structural)),
            Ok(brute) => Err(Error::OracleMismatch {
                binomial: format_monomial(b),
                detail: format!("structural {structural}, brute force {brute}"),
            }),
            Err(Error::SupportTooLarge { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    });
    let mut primitive = Vec::new();
    let mut skipped = 0;
    for (b, outcome) in candidates.iter().zip(outcomes) {
        match outcome? {
            Some(true) => primitive.push(b.clone()),
            Some(false) => {}
            None => {
                skipped += 1;
                let wg = support_walkgraph(b).map_err(Error::MalformedInput)?;
                if is_primitive_structural(&wg, g).is_primitive() {
                    primitive.push(b.clone());
                }
            }
        }
    }
    Ok((primitive, skipped))
}

/// Peeling vs. block oracle vs. forest oracle on every element. Returns the
/// number accepted.
pub fn check_mixedness(g: &Graph, basis: &[Binomial], exec: Execution) -> Result<usize> {
    let outcomes = par::map(exec, basis, |b| -> Result<bool> {
        let trace = filter_element(b, g)?;
        check_agreement(b, g, &trace)?;
        Ok(trace.is_accepted())
    });
    let mut accepted = 0;
    for o in outcomes {
        accepted += usize::from(o?);
    }
    Ok(accepted)
}

/// Full cross-check on one graph: enumerate every irreducible walk binomial,
/// compare both primitivity tests on each, confirm the pruned Graver search
/// finds exactly the primitive ones, then compare the three mixedness
/// decisions on each primitive element.
pub fn verify_graph(
    g: &Graph,
    limits: &EnumerationLimits,
    exec: Execution,
) -> Result<VerifyReport> {
    let candidates = enumerate_walk_binomials_with(g, limits, exec)?;
    let (primitive, skipped) = check_primitivity(g, &candidates, limits.max_support_edges, exec)?;

    let graver = graver_basis_with(g, limits, exec)?;
    if graver.elements() != primitive.as_slice() {
        let structural = primitive_subset(g, candidates.clone(), exec);
        let missing = structural
            .iter()
            .find(|b| !graver.contains(b))
            .or_else(|| graver.iter().find(|b| !structural.contains(b)));
        return Err(Error::OracleMismatch {
            binomial: missing.map(format_monomial).unwrap_or_default(),
            detail: "pruned Graver search disagrees with the filtered walk search".into(),
        });
    }

    let ugb = check_mixedness(g, &primitive, exec)?;
    Ok(VerifyReport {
        irreducible: candidates.len(),
        primitive: primitive.len(),
        ugb,
        bruteforce_skipped: skipped,
    })
}
