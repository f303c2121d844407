//! Set partitions of `{1..n}`, the noncrossing condition, and enumeration of
//! noncrossing partitions in restricted-growth-string order.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_capacity, Error, Result};
use crate::perm::MAX_ENUM_N;
use crate::text;

/// A noncrossing partition in canonical form: blocks sorted ascending
/// internally and ordered by their minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

/// Checks that `blocks` is a set partition of `{1..n}` where `n` is the total
/// number of elements, and returns the per-element block label (0-based
/// element index, labels are indices into `blocks`).
fn labels_of(blocks: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    if n == 0 {
        return Err(Error::Validation("partition of the empty set".into()));
    }
    let mut labels = vec![usize::MAX; n];
    for (b, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::Validation("empty block".into()));
        }
        for &x in block {
            if x == 0 || x > n {
                return Err(Error::Validation(format!("element {x} is outside 1..{n}")));
            }
            if labels[x - 1] != usize::MAX {
                return Err(Error::Validation(format!("element {x} appears twice")));
            }
            labels[x - 1] = b;
        }
    }
    Ok(labels)
}

/// Noncrossing test on a label vector. Two blocks cross iff some pair of
/// arcs joining consecutive elements of the same block interleave.
fn labels_noncrossing(labels: &[usize]) -> bool {
    let mut last = std::collections::HashMap::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (i, &l) in labels.iter().enumerate() {
        if let Some(prev) = last.insert(l, i) {
            arcs.push((prev, i));
        }
    }
    for (x, &(a, c)) in arcs.iter().enumerate() {
        for &(b, d) in &arcs[x + 1..] {
            if (a < b && b < c && c < d) || (b < a && a < d && d < c) {
                return false;
            }
        }
    }
    true
}

/// Whether a candidate set partition of `{1..n}` is noncrossing. Blocks may be
/// given in any order; a malformed partition (gap, overlap, empty block) is a
/// validation error.
pub fn is_noncrossing(blocks: &[Vec<usize>]) -> Result<bool> {
    Ok(labels_noncrossing(&labels_of(blocks)?))
}

/// Relabels a label vector so block ids appear in first-occurrence order
/// (the restricted growth string).
fn to_rgs(labels: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect()
}

impl NoncrossingPartition {
    pub fn from_blocks(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let labels = labels_of(&blocks)?;
        if !labels_noncrossing(&labels) {
            return Err(Error::Domain(format!(
                "partition {} is crossing",
                Self::from_labels_unchecked(&labels)
            )));
        }
        Ok(Self::from_labels_unchecked(&labels))
    }

    /// Builds the canonical form from arbitrary per-element labels; only label
    /// equality matters.
    pub(crate) fn from_labels_unchecked(labels: &[usize]) -> Self {
        let rgs = to_rgs(labels);
        let count = rgs.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        Self {
            n: labels.len(),
            blocks,
        }
    }

    /// From a restricted growth string (`rgs[0] = 0`, each entry at most one
    /// above the running maximum).
    pub fn from_rgs(rgs: &[usize]) -> Result<Self> {
        let mut max = None::<usize>;
        for &r in rgs {
            let ok = match max {
                None => r == 0,
                Some(m) => r <= m + 1,
            };
            if !ok {
                return Err(Error::Validation(format!(
                    "{rgs:?} is not a restricted growth string"
                )));
            }
            max = Some(max.map_or(r, |m| m.max(r)));
        }
        if rgs.is_empty() {
            return Err(Error::Validation("empty restricted growth string".into()));
        }
        if !labels_noncrossing(rgs) {
            return Err(Error::Domain(format!(
                "{rgs:?} encodes a crossing partition"
            )));
        }
        Ok(Self::from_labels_unchecked(rgs))
    }

    /// `{1..n}` as a single block.
    pub fn single_block(n: usize) -> Result<Self> {
        Self::from_blocks(vec![(1..=n).collect()])
    }

    pub fn singletons(n: usize) -> Result<Self> {
        Self::from_blocks((1..=n).map(|i| vec![i]).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index (into [`Self::blocks`]) per element; index 0 is element 1.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &x in block {
                labels[x - 1] = b;
            }
        }
        labels
    }

    pub fn rgs(&self) -> Vec<usize> {
        self.labels()
    }

    /// Smallest element of each block, ascending. Always starts with 1.
    pub fn block_minima(&self) -> Vec<usize> {
        // Canonical order sorts blocks by minimum already.
        self.blocks.iter().map(|b| b[0]).collect()
    }

    /// Refinement order: every block of `self` lies inside a single block of
    /// `other`.
    pub fn refines(&self, other: &NoncrossingPartition) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::Validation(format!(
                "ground sizes differ: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(self.refines_labels(&other.labels()))
    }

    pub(crate) fn refines_labels(&self, other_labels: &[usize]) -> bool {
        self.blocks.iter().all(|block| {
            let l = other_labels[block[0] - 1];
            block[1..].iter().all(|&x| other_labels[x - 1] == l)
        })
    }
}

impl fmt::Display for NoncrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            text::write_braced_list(f, block.iter().copied())?;
        }
        Ok(())
    }
}

impl FromStr for NoncrossingPartition {
    type Err = Error;

    /// `{1,4,6}/{2,3}/{5}/{7,8}`. Block order is free; the result is canonical.
    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Parse("empty partition".into()));
        }
        let blocks = s
            .split('/')
            .map(text::parse_braced_list)
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(blocks)
    }
}

/// Iterator over noncrossing partitions of `{1..n}` in lexicographic order of
/// their restricted growth strings.
#[derive(Debug, Clone)]
pub struct NcpIter {
    rgs: Vec<usize>,
    started: bool,
    done: bool,
}

impl NcpIter {
    fn fits(prefix: &mut Vec<usize>, v: usize) -> bool {
        prefix.push(v);
        let ok = labels_noncrossing(prefix);
        prefix.pop();
        ok
    }

    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        for i in (1..n).rev() {
            let mut prefix = self.rgs[..i].to_vec();
            let top = prefix.iter().copied().max().unwrap_or(0) + 1;
            let next = (self.rgs[i] + 1..=top).find(|&v| Self::fits(&mut prefix, v));
            if let Some(v) = next {
                prefix.push(v);
                // Greedy completion is lexicographically least; a fresh block
                // is always admissible so it never gets stuck.
                while prefix.len() < n {
                    let top = prefix.iter().copied().max().unwrap_or(0) + 1;
                    let v = (0..=top)
                        .find(|&v| Self::fits(&mut prefix, v))
                        .expect("a new singleton block is always noncrossing");
                    prefix.push(v);
                }
                self.rgs = prefix;
                return true;
            }
        }
        false
    }
}

impl Iterator for NcpIter {
    type Item = NoncrossingPartition;

    fn next(&mut self) -> Option<NoncrossingPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(NoncrossingPartition::from_labels_unchecked(&self.rgs))
    }
}

/// Every noncrossing partition of `{1..n}`, starting from the single block.
pub fn enumerate_ncp(n: usize) -> Result<NcpIter> {
    check_capacity("n", n, 1, MAX_ENUM_N)?;
    Ok(NcpIter {
        rgs: vec![0; n],
        started: false,
        done: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // All set partitions of {1..n} as restricted growth strings.
    fn all_set_partitions(n: usize) -> Vec<Vec<usize>> {
        fn rec(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for v in 0..=max + 1 {
                cur.push(v);
                rec(n, cur, max.max(v), out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, &mut vec![0], 0, &mut out);
        out
    }

    fn crossing_by_definition(rgs: &[usize]) -> bool {
        let n = rgs.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        if rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b] {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn noncrossing_examples() {
        assert!(is_noncrossing(&[vec![1, 4, 6], vec![2, 3], vec![5], vec![7, 8]]).unwrap());
        assert!(!is_noncrossing(&[vec![1, 3], vec![2, 4]]).unwrap());
        assert!(is_noncrossing(&[(1..=9).collect()]).unwrap());
    }

    #[test]
    fn malformed_candidates_are_validation_errors() {
        for bad in [
            vec![vec![1, 2], vec![2, 3]],
            vec![vec![1, 4]],
            vec![vec![1], vec![]],
            vec![vec![0, 1]],
        ] {
            assert!(
                matches!(is_noncrossing(&bad), Err(Error::Validation(_))),
                "{bad:?}"
            );
        }
        assert!(matches!(
            NoncrossingPartition::from_blocks(vec![vec![1, 3], vec![2, 4]]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn arc_test_matches_quadruple_definition() {
        for n in 1..=7 {
            for rgs in all_set_partitions(n) {
                assert_eq!(
                    labels_noncrossing(&rgs),
                    !crossing_by_definition(&rgs),
                    "{rgs:?}"
                );
            }
        }
    }

    #[test]
    fn enumeration_is_the_filtered_rgs_list() {
        for n in 1..=8 {
            let expected: Vec<Vec<usize>> = all_set_partitions(n)
                .into_iter()
                .filter(|r| !crossing_by_definition(r))
                .collect();
            let got: Vec<Vec<usize>> = enumerate_ncp(n).unwrap().map(|q| q.rgs()).collect();
            assert_eq!(got, expected, "n={n}");
        }
        assert_eq!(enumerate_ncp(3).unwrap().count(), 5);
        assert_eq!(enumerate_ncp(4).unwrap().count(), 14);
        let one: Vec<String> = enumerate_ncp(1).unwrap().map(|q| q.to_string()).collect();
        assert_eq!(one, ["{1}"]);
    }

    #[test]
    fn canonical_form_and_text() {
        let q: NoncrossingPartition = "{7,8}/{5}/{6,4,1}/{3,2}".parse().unwrap();
        assert_eq!(q.to_string(), "{1,4,6}/{2,3}/{5}/{7,8}");
        let again: NoncrossingPartition = q.to_string().parse().unwrap();
        assert_eq!(again, q);
        assert_eq!(q.block_minima(), vec![1, 2, 5, 7]);
        for bad in [
            "",
            "{1,2}/",
            "{1,2}{3}",
            "{1,2}/{3} ",
            "{1,3}/{2,4}",
            "{1,2}/{4}",
        ] {
            assert!(bad.parse::<NoncrossingPartition>().is_err(), "{bad}");
        }
    }

    #[test]
    fn block_minima_extremes() {
        for n in 1..=10 {
            assert_eq!(
                NoncrossingPartition::single_block(n)
                    .unwrap()
                    .block_minima(),
                vec![1]
            );
            assert_eq!(
                NoncrossingPartition::singletons(n).unwrap().block_minima(),
                (1..=n).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn refinement() {
        let a = NoncrossingPartition::singletons(4).unwrap();
        let b: NoncrossingPartition = "{1,2}/{3}/{4}".parse().unwrap();
        assert!(a.refines(&b).unwrap());
        assert!(!b.refines(&a).unwrap());
        let x: NoncrossingPartition = "{1,3}/{2}".parse().unwrap();
        let y: NoncrossingPartition = "{1}/{2,3}".parse().unwrap();
        assert!(!x.refines(&y).unwrap() && !y.refines(&x).unwrap());
        let top = NoncrossingPartition::single_block(5).unwrap();
        for q in enumerate_ncp(5).unwrap() {
            assert!(q.refines(&top).unwrap());
        }
        assert!(matches!(a.refines(&x), Err(Error::Validation(_))));
    }

    #[test]
    fn rgs_validation() {
        assert!(NoncrossingPartition::from_rgs(&[0, 1, 0, 2]).is_ok());
        assert!(NoncrossingPartition::from_rgs(&[1]).is_err());
        assert!(NoncrossingPartition::from_rgs(&[0, 2]).is_err());
        assert!(matches!(
            NoncrossingPartition::from_rgs(&[0, 1, 0, 1]),
            Err(Error::Domain(_))
        ));
    }
}
