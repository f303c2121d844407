//! Permutations in one-line notation, the 132 pattern, and lexicographic
//! enumeration of the 132-avoiding class.

use std::fmt;
use std::str::FromStr;

use crate::descent::DescentSet;
use crate::error::{check_capacity, Error, Result};
use crate::text;

/// Largest ground size accepted by the enumerators.
pub const MAX_ENUM_N: usize = 20;

/// A permutation of `{1, ..., n}` in one-line notation. Positions and values
/// are 1-based at every public boundary.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::Validation("empty permutation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &entries {
            if v == 0 || v > n {
                return Err(Error::Validation(format!("value {v} is outside 1..{n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Validation(format!("value {v} appears twice")));
            }
        }
        Ok(Self { entries })
    }

    /// Like [`Permutation::new`] but additionally requires 132-avoidance.
    pub fn new_avoiding(entries: Vec<usize>) -> Result<Self> {
        let p = Self::new(entries)?;
        if !p.is_132_avoiding() {
            return Err(Error::Domain(format!("{p} contains the pattern 132")));
        }
        Ok(p)
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok());
        Self { entries }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((1..=n).collect())
    }

    pub fn decreasing(n: usize) -> Result<Self> {
        Self::new((1..=n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// Linear-time test. Scanning right to left, `pending` is the largest value
    /// already known to have a larger value on its left; any later (leftward)
    /// entry below `pending` completes a 132.
    pub fn is_132_avoiding(&self) -> bool {
        let mut stack: Vec<usize> = Vec::with_capacity(self.n());
        let mut pending = 0usize;
        for &x in self.entries.iter().rev() {
            if x < pending {
                return false;
            }
            while let Some(&top) = stack.last() {
                if top >= x {
                    break;
                }
                pending = top;
                stack.pop();
            }
            stack.push(x);
        }
        true
    }

    /// Cubic check straight from the definition: no `i < j < k` with
    /// `p_i < p_k < p_j`.
    pub fn is_132_avoiding_naive(&self) -> bool {
        let e = &self.entries;
        let n = e.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if e[i] < e[k] && e[k] < e[j] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn descent_set(&self) -> DescentSet {
        let mut mask = 0u64;
        for (i, w) in self.entries.windows(2).enumerate() {
            if w[0] > w[1] {
                mask |= 1 << i;
            }
        }
        DescentSet::from_mask(self.n(), mask).expect("n within DescentSet capacity")
    }

    pub fn descent_count(&self) -> usize {
        self.entries.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Positions holding a value smaller than everything to its left.
    /// Position 1 is always included.
    pub fn left_to_right_minima_positions(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut low = usize::MAX;
        for (i, &x) in self.entries.iter().enumerate() {
            if x < low {
                low = x;
                out.push(i + 1);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_one_line(f, &self.entries)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(text::parse_one_line(s)?)
    }
}

/// Can `v` be placed right after `prefix` while keeping the permutation
/// completable to a 132-avoiding one? `rest` is the set of unused values
/// including `v`.
///
/// A 132-avoiding prefix is completable iff no unused value lies strictly
/// between `prefix[a] < prefix[b]` for some `a < b` (append the rest in
/// increasing order otherwise).
fn may_follow(prefix: &[usize], rest: &[bool], v: usize) -> bool {
    // v itself must not be the '2' of a pattern inside the prefix.
    let mut low = usize::MAX;
    let mut below_v = usize::MAX;
    for &x in prefix {
        if low < v && v < x {
            return false;
        }
        low = low.min(x);
        if x < v {
            below_v = below_v.min(x);
        }
    }
    // The new pairs (x, v) with x < v must not trap any other unused value.
    below_v == usize::MAX || !(below_v + 1..v).any(|r| rest[r])
}

/// Iterator over all 132-avoiding permutations of `{1..n}` in lexicographic
/// order of the one-line notation.
#[derive(Debug, Clone)]
pub struct Av132Iter {
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl Av132Iter {
    fn advance(&mut self) -> bool {
        let n = self.current.len();
        if n < 2 {
            return false;
        }
        let mut rest = vec![false; n + 1];
        rest[self.current[n - 1]] = true;
        for i in (0..n - 1).rev() {
            rest[self.current[i]] = true;
            let prefix = &self.current[..i];
            let old = self.current[i];
            let next = (old + 1..=n).find(|&v| rest[v] && may_follow(prefix, &rest, v));
            if let Some(v) = next {
                rest[v] = false;
                self.current[i] = v;
                let tail: Vec<usize> = (1..=n).filter(|&r| rest[r]).collect();
                self.current[i + 1..].copy_from_slice(&tail);
                return true;
            }
        }
        false
    }
}

impl Iterator for Av132Iter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(Permutation::from_entries_unchecked(self.current.clone()))
    }
}

/// Every 132-avoiding permutation of `{1..n}`, lexicographically.
pub fn enumerate_av132(n: usize) -> Result<Av132Iter> {
    check_capacity("n", n, 1, MAX_ENUM_N)?;
    Ok(Av132Iter {
        current: (1..=n).collect(),
        started: false,
        done: false,
    })
}
