//! An explicit order-reversing bijection of P.
//!
//! Permutations sharing a descent set have identical up- and down-sets, so P
//! is a Boolean lattice on `{1..n-1}` with each subset repeated. Reverse
//! complement reverses inclusion on subsets; pairing the repeat-classes of
//! `S` and its reverse complement (equal sizes) lifts it to P.

use std::collections::BTreeMap;

use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::GradedPoset;

/// A self-map of a poset's index set, claimed to reverse the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntiAutomorphism {
    mapping: Vec<usize>,
}

impl AntiAutomorphism {
    pub fn new(mapping: Vec<usize>) -> Self {
        Self { mapping }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn image(&self, i: usize) -> usize {
        self.mapping[i]
    }
}

/// Elements grouped by descent set, each group in element (lexicographic) order.
pub fn descent_fibers(poset: &GradedPoset<Permutation>) -> BTreeMap<DescentSet, Vec<usize>> {
    let mut fibers: BTreeMap<DescentSet, Vec<usize>> = BTreeMap::new();
    for (i, p) in poset.elements().iter().enumerate() {
        fibers.entry(p.descent_set()).or_default().push(i);
    }
    for fiber in fibers.values_mut() {
        fiber.sort_by(|&a, &b| poset.elements()[a].cmp(&poset.elements()[b]));
    }
    fibers
}

/// Matches the `j`-th element of the fibre over `S` with the `j`-th element of
/// the fibre over the reverse complement of `S`.
pub fn construct_antiautomorphism(poset: &GradedPoset<Permutation>) -> Result<AntiAutomorphism> {
    let fibers = descent_fibers(poset);
    let mut mapping = vec![usize::MAX; poset.len()];
    for (s, fiber) in &fibers {
        let alpha = s.reverse_complement();
        let partner = fibers.get(&alpha).map_or(&[][..], Vec::as_slice);
        if partner.len() != fiber.len() {
            return Err(Error::Consistency(format!(
                "{} permutations have descent set {s} but {} have {alpha}",
                fiber.len(),
                partner.len()
            )));
        }
        for (&x, &y) in fiber.iter().zip(partner) {
            mapping[x] = y;
        }
    }
    Ok(AntiAutomorphism { mapping })
}

/// Number of ordered pairs `(x, y)` where `x <= y` and `m(y) <= m(x)` disagree,
/// or `None` when `m` is not a bijection of the index set.
pub fn order_reversal_violations<T>(poset: &GradedPoset<T>, m: &AntiAutomorphism) -> Option<u64> {
    let n = poset.len();
    if m.mapping.len() != n {
        return None;
    }
    let mut hit = vec![false; n];
    for &y in &m.mapping {
        if y >= n || std::mem::replace(&mut hit[y], true) {
            return None;
        }
    }
    let mut bad = 0u64;
    for x in 0..n {
        for y in 0..n {
            if poset.leq(x, y) != poset.leq(m.mapping[y], m.mapping[x]) {
                bad += 1;
            }
        }
    }
    Some(bad)
}

/// True iff `m` is bijective and `x <= y` exactly when `m(y) <= m(x)`.
pub fn verify_antiautomorphism<T>(poset: &GradedPoset<T>, m: &AntiAutomorphism) -> bool {
    order_reversal_violations(poset, m) == Some(0)
}
