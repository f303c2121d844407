//! Finite posets stored as a full order bit-matrix plus their Hasse diagram,
//! and builders for the descent-order poset on 132-avoiding permutations (P)
//! and the refinement poset on noncrossing partitions (Q).

use rayon::prelude::*;

use crate::bijection::ncp_to_perm;
use crate::error::{check_capacity, Error, Result};
use crate::partition::{enumerate_ncp, NoncrossingPartition};
use crate::perm::{enumerate_av132, Permutation};

pub mod antichain;
pub mod coarsening;
pub mod duality;
pub mod export;

/// Largest `n` for which P and Q are materialized with a full order matrix.
pub const MAX_POSET_N: usize = 10;

/// Square bit-matrix, one row of `u64` words per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    size: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(size: usize) -> Self {
        let words = size.div_ceil(64).max(1);
        Self {
            size,
            words,
            data: vec![0; size * words],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    /// Column indices set in row `i`, ascending.
    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + t)
            })
        })
    }

    pub fn row_count(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Fills every row in parallel; each worker owns disjoint rows.
    pub fn from_fn<F>(size: usize, f: F) -> Self
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let mut m = Self::new(size);
        let words = m.words;
        m.data
            .par_chunks_mut(words)
            .enumerate()
            .for_each(|(i, row)| {
                for j in 0..size {
                    if f(i, j) {
                        row[j / 64] |= 1 << (j % 64);
                    }
                }
            });
        m
    }
}

/// A finite poset with its full reflexive order, its cover relation and a
/// rank function.
#[derive(Debug, Clone)]
pub struct GradedPoset<T> {
    elements: Vec<T>,
    order: BitMatrix,
    covers: Vec<(usize, usize)>,
    rank: Vec<usize>,
}

impl<T: Sync> GradedPoset<T> {
    /// Builds the order matrix from `leq` and ranks elements with `rank`.
    pub fn with_rank<L, R>(elements: Vec<T>, leq: L, rank: R) -> Self
    where
        L: Fn(&T, &T) -> bool + Sync,
        R: Fn(&T) -> usize,
    {
        let order = BitMatrix::from_fn(elements.len(), |i, j| leq(&elements[i], &elements[j]));
        let covers = transitive_reduction(&order);
        let rank = elements.iter().map(rank).collect();
        Self {
            elements,
            order,
            covers,
            rank,
        }
    }

    /// Builds the order matrix from `leq` and ranks every element by the
    /// length of the longest chain below it.
    pub fn from_order<L>(elements: Vec<T>, leq: L) -> Self
    where
        L: Fn(&T, &T) -> bool + Sync,
    {
        let order = BitMatrix::from_fn(elements.len(), |i, j| leq(&elements[i], &elements[j]));
        let covers = transitive_reduction(&order);
        let rank = heights(order.size(), &covers);
        Self {
            elements,
            order,
            covers,
            rank,
        }
    }
}

impl<T> GradedPoset<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn order(&self) -> &BitMatrix {
        &self.order
    }

    /// `(lower, upper)` index pairs, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order.get(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.order.get(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// Elements covering nothing, ascending.
    pub fn minimal_elements(&self) -> Vec<usize> {
        let mut has_lower = vec![false; self.len()];
        for &(_, b) in &self.covers {
            has_lower[b] = true;
        }
        (0..self.len()).filter(|&i| !has_lower[i]).collect()
    }

    /// Elements covered by nothing, ascending.
    pub fn maximal_elements(&self) -> Vec<usize> {
        let mut has_upper = vec![false; self.len()];
        for &(a, _) in &self.covers {
            has_upper[a] = true;
        }
        (0..self.len()).filter(|&i| !has_upper[i]).collect()
    }

    /// Number of elements at each rank, rank 0 first.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let top = self.rank.iter().copied().max().map_or(0, |r| r + 1);
        let mut sizes = vec![0; top];
        for &r in &self.rank {
            sizes[r] += 1;
        }
        sizes
    }

    /// Violations of reflexivity, antisymmetry and transitivity on the full matrix.
    pub fn order_axiom_violations(&self) -> Vec<String> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            if !self.leq(i, i) {
                out.push(format!("not reflexive at {i}"));
            }
            for j in i + 1..n {
                if self.leq(i, j) && self.leq(j, i) {
                    out.push(format!("not antisymmetric at ({i}, {j})"));
                }
            }
        }
        // x <= y means row(y) is a subset of row(x).
        for i in 0..n {
            for j in self.order.row_ones(i) {
                let (ri, rj) = (self.order.row(i), self.order.row(j));
                if rj.iter().zip(ri).any(|(b, a)| b & !a != 0) {
                    out.push(format!("not transitive through ({i}, {j})"));
                }
            }
        }
        out
    }

    /// Rank 0 exactly on minimal elements, and +1 along every cover.
    pub fn gradedness_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let minimal = self.minimal_elements();
        for i in 0..self.len() {
            let is_min = minimal.binary_search(&i).is_ok();
            if is_min != (self.rank[i] == 0) {
                out.push(format!(
                    "element {i} has rank {} but minimal = {is_min}",
                    self.rank[i]
                ));
            }
        }
        for &(a, b) in &self.covers {
            if self.rank[b] != self.rank[a] + 1 {
                out.push(format!(
                    "cover ({a}, {b}) goes from rank {} to rank {}",
                    self.rank[a], self.rank[b]
                ));
            }
        }
        out
    }

    /// A linear extension: indices sorted so that `x < y` puts `x` first.
    pub fn linear_extension(&self) -> Vec<usize> {
        linear_extension(&self.order)
    }
}

fn linear_extension(order: &BitMatrix) -> Vec<usize> {
    // x < y implies up(y) is a proper subset of up(x).
    let mut idx: Vec<usize> = (0..order.size()).collect();
    idx.sort_by_key(|&i| (std::cmp::Reverse(order.row_count(i)), i));
    idx
}

/// Hasse diagram of a reflexive order: `x` is covered by `z` iff `x < z` and no
/// `w` has `x < w < z`. Strict successors are scanned in linear-extension
/// order so only the minimal ones contribute their up-sets to the mask.
pub fn transitive_reduction(order: &BitMatrix) -> Vec<(usize, usize)> {
    let n = order.size();
    let ext = linear_extension(order);
    let mut pos = vec![0; n];
    for (p, &i) in ext.iter().enumerate() {
        pos[i] = p;
    }
    let mut covers: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut above: Vec<usize> = order.row_ones(x).filter(|&z| z != x).collect();
            above.sort_by_key(|&z| pos[z]);
            let mut implied = vec![0u64; n.div_ceil(64).max(1)];
            let mut out = Vec::new();
            for z in above {
                if implied[z / 64] >> (z % 64) & 1 == 1 {
                    continue;
                }
                out.push((x, z));
                for (m, &r) in implied.iter_mut().zip(order.row(z)) {
                    *m |= r;
                }
            }
            out
        })
        .collect();
    covers.sort_unstable();
    covers
}

fn heights(n: usize, covers: &[(usize, usize)]) -> Vec<usize> {
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in covers {
        below[b].push(a);
    }
    let mut memo = vec![None; n];
    fn h(i: usize, below: &[Vec<usize>], memo: &mut [Option<usize>]) -> usize {
        if let Some(v) = memo[i] {
            return v;
        }
        let v = below[i]
            .iter()
            .map(|&a| h(a, below, memo) + 1)
            .max()
            .unwrap_or(0);
        memo[i] = Some(v);
        v
    }
    (0..n).map(|i| h(i, &below, &mut memo)).collect()
}

/// Descent order, reflexive: `x <= y` iff `x == y` or `D(x)` is a proper
/// subset of `D(y)`. Distinct permutations sharing a descent set are
/// incomparable.
pub fn leq_p(x: &Permutation, y: &Permutation) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::Validation(format!(
            "ground sizes differ: {} vs {}",
            x.n(),
            y.n()
        )));
    }
    for p in [x, y] {
        if !p.is_132_avoiding() {
            return Err(Error::Domain(format!("{p} contains the pattern 132")));
        }
    }
    Ok(x == y || x.descent_set().is_proper_subset(&y.descent_set()))
}

/// Refinement order: every block of `a` sits inside one block of `b`.
pub fn leq_q(a: &NoncrossingPartition, b: &NoncrossingPartition) -> Result<bool> {
    a.refines(b)
}

/// The descent-order poset on 132-avoiding permutations of `{1..n}`, elements
/// in lexicographic order, rank = number of descents.
pub fn build_poset_p(n: usize) -> Result<GradedPoset<Permutation>> {
    check_capacity("n", n, 1, MAX_POSET_N)?;
    let elements: Vec<Permutation> = enumerate_av132(n)?.collect();
    let masks: Vec<u64> = elements.iter().map(|p| p.descent_set().mask()).collect();
    let order = BitMatrix::from_fn(elements.len(), |i, j| {
        i == j || (masks[i] & !masks[j] == 0 && masks[i] != masks[j])
    });
    let covers = transitive_reduction(&order);
    let rank = elements.iter().map(Permutation::descent_count).collect();
    Ok(GradedPoset {
        elements,
        order,
        covers,
        rank,
    })
}

/// The refinement poset on noncrossing partitions of `{1..n}`, elements in
/// restricted-growth order, rank = `n - #blocks` (all singletons at rank 0).
pub fn build_poset_q(n: usize) -> Result<GradedPoset<NoncrossingPartition>> {
    check_capacity("n", n, 1, MAX_POSET_N)?;
    let elements: Vec<NoncrossingPartition> = enumerate_ncp(n)?.collect();
    let labels: Vec<Vec<usize>> = elements.iter().map(NoncrossingPartition::labels).collect();
    let order = BitMatrix::from_fn(elements.len(), |i, j| {
        elements[i].refines_labels(&labels[j])
    });
    let covers = transitive_reduction(&order);
    let rank = elements.iter().map(|q| n - q.block_count()).collect();
    Ok(GradedPoset {
        elements,
        order,
        covers,
        rank,
    })
}

/// Index of each Q-element's image under the bijection inside P's element list.
pub fn bijection_indices(
    p: &GradedPoset<Permutation>,
    q: &GradedPoset<NoncrossingPartition>,
) -> Result<Vec<usize>> {
    q.elements()
        .iter()
        .map(|a| {
            let image = ncp_to_perm(a);
            p.elements()
                .binary_search(&image)
                .map_err(|_| Error::Consistency(format!("{image} missing from P")))
        })
        .collect()
}

pub fn is_palindromic(xs: &[usize]) -> bool {
    xs.iter().eq(xs.iter().rev())
}

/// Weakly increasing then weakly decreasing.
pub fn is_unimodal(xs: &[usize]) -> bool {
    if xs.is_empty() {
        return true;
    }
    let peak = xs
        .iter()
        .enumerate()
        .max_by_key(|&(i, &x)| (x, std::cmp::Reverse(i)))
        .map_or(0, |(i, _)| i);
    xs[..=peak].windows(2).all(|w| w[0] <= w[1]) && xs[peak..].windows(2).all(|w| w[0] >= w[1])
}
