//! Counting 132-avoiding permutations by exact descent set.
//!
//! Two independent routes: a census filled by one pass over the enumeration,
//! and a recursive counter that peels off forced prefixes of the permutation.

use std::collections::HashMap;
use std::io::Write;

use crate::descent::DescentSet;
use crate::error::{check_capacity, Error, Result};
use crate::perm::enumerate_av132;

/// Largest `n` for which a census (one counter per subset of `{1..n-1}`) is built.
pub const MAX_CENSUS_N: usize = 14;

/// `counts[mask]` is the number of 132-avoiding permutations of `{1..n}` whose
/// descent set has bit mask `mask`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescentCensus {
    n: usize,
    counts: Vec<u64>,
}

impl DescentCensus {
    pub fn build(n: usize) -> Result<Self> {
        check_capacity("n", n, 1, MAX_CENSUS_N)?;
        let mut counts = vec![0u64; 1 << (n - 1)];
        for p in enumerate_av132(n)? {
            counts[p.descent_set().mask() as usize] += 1;
        }
        Ok(Self { n, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn count(&self, s: &DescentSet) -> u64 {
        assert_eq!(s.n(), self.n, "descent set over a different ground size");
        self.counts[s.mask() as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `(set, count)` for every subset, in increasing mask order.
    pub fn iter(&self) -> impl Iterator<Item = (DescentSet, u64)> + '_ {
        self.counts.iter().enumerate().map(|(mask, &c)| {
            (
                DescentSet::from_mask(self.n, mask as u64).expect("mask in range"),
                c,
            )
        })
    }

    /// Total count over subsets of each size, size 0 first.
    pub fn by_size(&self) -> Vec<u64> {
        let mut out = vec![0; self.n];
        for (mask, &c) in self.counts.iter().enumerate() {
            out[mask.count_ones() as usize] += c;
        }
        out
    }

    /// CSV with header `descent_set_text,size,count`, one row per subset in
    /// increasing mask order.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Validation(format!("csv output failed: {e}"));
        w.write_record(["descent_set_text", "size", "count"])
            .map_err(io)?;
        for (s, c) in self.iter() {
            w.write_record([s.to_string(), s.len().to_string(), c.to_string()])
                .map_err(io)?;
        }
        w.flush()
            .map_err(|e| Error::Validation(format!("csv output failed: {e}")))?;
        Ok(())
    }
}

/// Exact-descent-set count by filtering the full enumeration.
pub fn count_by_descent_set_bruteforce(n: usize, s: &DescentSet) -> Result<u64> {
    check_capacity("n", n, 1, MAX_CENSUS_N)?;
    if s.n() != n {
        return Err(Error::Validation(format!(
            "descent set is over {} positions, expected {n}",
            s.n()
        )));
    }
    Ok(enumerate_av132(n)?
        .filter(|p| p.descent_set() == *s)
        .count() as u64)
}

/// Exact-descent-set count by recursion on the shape of the first run.
///
/// * `S` empty or `S = {1..n-1}`: one permutation.
/// * `min S = t > 1`: the first `t` entries increase through consecutive
///   values, so they collapse to one entry: `count(n, S) = count(n-t+1, S-(t-1))`.
/// * `min S = 1`, `u` the least position outside `S`: the first `u` entries
///   are left-to-right minima and entry `u+1` is not. Viewed through the
///   block-minimum correspondence, element `u+1` joins one of the `u` blocks
///   opened by `1..u` (the `j`-th one, closing the later `u-j` as singletons),
///   leaving an instance whose first `j` elements open blocks and the rest of
///   `S` shifted down by `u+1-j`. Summing over `j = 1..u` gives the count.
pub fn count_by_descent_set_lemma(n: usize, s: &DescentSet) -> Result<u64> {
    if s.n() != n {
        return Err(Error::Validation(format!(
            "descent set is over {} positions, expected {n}",
            s.n()
        )));
    }
    let mut memo = HashMap::new();
    Ok(count_rec(n, s.mask(), &mut memo))
}

fn count_rec(n: usize, mask: u64, memo: &mut HashMap<(usize, u64), u64>) -> u64 {
    let full = if n <= 1 {
        0
    } else {
        u64::MAX >> (64 - (n - 1))
    };
    if mask == 0 || mask == full {
        return 1;
    }
    if let Some(&c) = memo.get(&(n, mask)) {
        return c;
    }
    let t = mask.trailing_zeros() as usize + 1;
    let c = if t > 1 {
        count_rec(n - (t - 1), mask >> (t - 1), memo)
    } else {
        let u = mask.trailing_ones() as usize + 1;
        // positions > u (bits >= u) survive, shifted
        let tail = mask >> u;
        (1..=u)
            .map(|j| {
                let lead = (1u64 << (j - 1)) - 1;
                count_rec(n - u - 1 + j, lead | tail << (j - 1), memo)
            })
            .sum()
    };
    memo.insert((n, mask), c);
    c
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub n: usize,
    pub subsets_checked: u64,
    /// `(S, count(S), count(reverse_complement(S)))` where the two differ.
    pub violations: Vec<(DescentSet, u64, u64)>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `count(S) = count(reverse_complement(S))` for every subset on one census.
pub fn verify_lemma(n: usize) -> Result<LemmaReport> {
    let census = DescentCensus::build(n)?;
    Ok(lemma_report(&census))
}

pub fn lemma_report(census: &DescentCensus) -> LemmaReport {
    let mut violations = Vec::new();
    let mut subsets_checked = 0;
    for (s, c) in census.iter() {
        subsets_checked += 1;
        let alpha = s.reverse_complement();
        let d = census.count(&alpha);
        if c != d {
            violations.push((s, c, d));
        }
    }
    LemmaReport {
        n: census.n(),
        subsets_checked,
        violations,
    }
}
