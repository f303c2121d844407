use std::fmt;

use crate::error::{Error, Result};
use crate::text;

/// Largest ground size a [`DescentSet`] can describe (positions `1..=63`).
pub const MAX_DESCENT_N: usize = 64;

/// A subset of the positions `{1, ..., n-1}`, stored as a bit mask where bit
/// `i - 1` stands for position `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescentSet {
    n: usize,
    mask: u64,
}

impl DescentSet {
    fn position_mask(n: usize) -> u64 {
        if n <= 1 {
            0
        } else {
            u64::MAX >> (64 - (n - 1))
        }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_mask(n, 0)
    }

    /// The full set `{1, ..., n-1}`.
    pub fn full(n: usize) -> Result<Self> {
        Self::from_mask(n, Self::position_mask(n))
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n == 0 || n > MAX_DESCENT_N {
            return Err(Error::Capacity {
                what: "descent set ground size",
                got: n,
                max: MAX_DESCENT_N,
            });
        }
        if mask & !Self::position_mask(n) != 0 {
            return Err(Error::Validation(format!(
                "mask {mask:#b} references positions outside 1..{}",
                n - 1
            )));
        }
        Ok(Self { n, mask })
    }

    pub fn from_positions<I: IntoIterator<Item = usize>>(n: usize, positions: I) -> Result<Self> {
        let mut mask = 0u64;
        for i in positions {
            if i == 0 || i >= n {
                return Err(Error::Validation(format!(
                    "position {i} is outside 1..{}",
                    n.saturating_sub(1)
                )));
            }
            mask |= 1 << (i - 1);
        }
        Self::from_mask(n, mask)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i < self.n && self.mask >> (i - 1) & 1 == 1
    }

    /// Ascending positions.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n).filter(move |&i| self.contains(i))
    }

    pub fn min(&self) -> Option<usize> {
        (self.mask != 0).then(|| self.mask.trailing_zeros() as usize + 1)
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.n == other.n && self.mask & !other.mask == 0
    }

    pub fn is_proper_subset(&self, other: &DescentSet) -> bool {
        self.is_subset(other) && self.mask != other.mask
    }

    /// Reverse complement: `i` is in the result iff `n - i` is not in `self`.
    pub fn reverse_complement(&self) -> DescentSet {
        let mut mask = 0u64;
        for i in 1..self.n {
            if !self.contains(self.n - i) {
                mask |= 1 << (i - 1);
            }
        }
        DescentSet { n: self.n, mask }
    }

    /// Every subset of `{1, ..., n-1}` in increasing mask order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = DescentSet>> {
        if n == 0 || n > 32 {
            return Err(Error::Capacity {
                what: "descent set enumeration ground size",
                got: n,
                max: 32,
            });
        }
        Ok((0..1u64 << (n - 1)).map(move |mask| DescentSet { n, mask }))
    }

    /// Parses the `{1,4,6}` form; `{}` is the empty set.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let positions = text::parse_braced_list(s)?;
        let mut sorted = positions.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != positions.len() {
            return Err(Error::Parse(format!("repeated position in {s:?}")));
        }
        Self::from_positions(n, positions)
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        text::write_braced_list(f, self.positions())
    }
}
