//! Strict refinement in Q versus strict descent-set containment in P.

use rayon::prelude::*;

use crate::bijection::ncp_to_perm;
use crate::error::{check_capacity, Result};
use crate::partition::{enumerate_ncp, NoncrossingPartition};
use crate::perm::Permutation;

use super::antichain::dilworth;
use super::GradedPoset;

pub const MAX_COARSENING_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoarseningReport {
    pub n: usize,
    /// Ordered pairs `a < b` (strict refinement) that were examined.
    pub pairs_checked: u64,
    /// Pairs `a < b` for which `D(f(b))` is not a proper subset of `D(f(a))`.
    pub counterexamples: Vec<(NoncrossingPartition, NoncrossingPartition)>,
}

impl CoarseningReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// For every strict refinement `a < b` checks that the image of the coarser
/// partition has strictly fewer descents, contained in those of the finer one.
pub fn check_coarsening(n: usize) -> Result<CoarseningReport> {
    check_capacity("n", n, 1, MAX_COARSENING_N)?;
    let parts: Vec<NoncrossingPartition> = enumerate_ncp(n)?.collect();
    let labels: Vec<Vec<usize>> = parts.iter().map(NoncrossingPartition::labels).collect();
    let descents: Vec<_> = parts.iter().map(|q| ncp_to_perm(q).descent_set()).collect();

    let (pairs_checked, counterexamples) = (0..parts.len())
        .into_par_iter()
        .map(|i| {
            let mut checked = 0u64;
            let mut bad = Vec::new();
            for j in 0..parts.len() {
                if i == j || !parts[i].refines_labels(&labels[j]) {
                    continue;
                }
                checked += 1;
                if !descents[j].is_proper_subset(&descents[i]) {
                    bad.push((parts[i].clone(), parts[j].clone()));
                }
            }
            (checked, bad)
        })
        .reduce(
            || (0, Vec::new()),
            |(c1, mut b1), (c2, b2)| {
                b1.extend(b2);
                (c1 + c2, b1)
            },
        );
    Ok(CoarseningReport {
        n,
        pairs_checked,
        counterexamples,
    })
}

/// Maps the maximum antichain found in P through the inverse bijection and
/// returns the pairs that turn out comparable in Q (empty when the antichain
/// transfers).
pub fn antichain_transfer_violations(
    p: &GradedPoset<Permutation>,
) -> Result<(usize, Vec<(NoncrossingPartition, NoncrossingPartition)>)> {
    let witness = dilworth(p)?;
    let preimages: Vec<NoncrossingPartition> = witness
        .antichain
        .iter()
        .map(|&i| crate::bijection::perm_to_ncp(&p.elements()[i]))
        .collect::<Result<_>>()?;
    let mut bad = Vec::new();
    for (a, x) in preimages.iter().enumerate() {
        for y in &preimages[a + 1..] {
            if x.refines(y)? || y.refines(x)? {
                bad.push((x.clone(), y.clone()));
            }
        }
    }
    Ok((witness.width(), bad))
}
