//! Antichains and chain covers.
//!
//! The width comes from Dilworth duality: a maximum matching in the bipartite
//! graph `{x_left -> y_right : x < y}` glues elements into a minimum chain
//! partition, and König's construction on the same matching yields an
//! antichain of equal size.
//!
//! The Greene–Kleitman numbers `d_k` (largest union of `k` antichains) come
//! from the dual chain side: `d_k = min_m (k*m + N - c_m)` where `c_m` is the
//! largest number of elements covered by `m` disjoint chains. The `c_m` are
//! successive shortest paths of a min-cost flow on the Hasse diagram.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use super::GradedPoset;
use crate::error::{Error, Result};

/// Largest poset handled by the matching and flow routines.
pub const MAX_ANTICHAIN_ELEMENTS: usize = 20_000;

fn check_size<T>(poset: &GradedPoset<T>) -> Result<()> {
    if poset.len() > MAX_ANTICHAIN_ELEMENTS {
        return Err(Error::Capacity {
            what: "poset size",
            got: poset.len(),
            max: MAX_ANTICHAIN_ELEMENTS,
        });
    }
    Ok(())
}

/// Hopcroft–Karp on the strict-order bipartite graph.
struct StrictMatching {
    adj: Vec<Vec<usize>>,
    /// `mate_left[x] = Some(y)` when `x_left` is matched with `y_right`.
    mate_left: Vec<Option<usize>>,
    mate_right: Vec<Option<usize>>,
}

impl StrictMatching {
    fn solve<T>(poset: &GradedPoset<T>) -> Self {
        let n = poset.len();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|x| poset.order().row_ones(x).filter(|&y| y != x).collect())
            .collect();
        let mut m = Self {
            adj,
            mate_left: vec![None; n],
            mate_right: vec![None; n],
        };
        let mut dist = vec![usize::MAX; n];
        while m.bfs(&mut dist) {
            for x in 0..n {
                if m.mate_left[x].is_none() {
                    m.dfs(x, &mut dist);
                }
            }
        }
        m
    }

    fn bfs(&self, dist: &mut [usize]) -> bool {
        let mut queue = VecDeque::new();
        for (x, d) in dist.iter_mut().enumerate() {
            if self.mate_left[x].is_none() {
                *d = 0;
                queue.push_back(x);
            } else {
                *d = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                match self.mate_right[y] {
                    None => found = true,
                    Some(x2) if dist[x2] == usize::MAX => {
                        dist[x2] = dist[x] + 1;
                        queue.push_back(x2);
                    }
                    Some(_) => {}
                }
            }
        }
        found
    }

    fn dfs(&mut self, x: usize, dist: &mut [usize]) -> bool {
        for i in 0..self.adj[x].len() {
            let y = self.adj[x][i];
            let ok = match self.mate_right[y] {
                None => true,
                Some(x2) => dist[x2] == dist[x] + 1 && self.dfs(x2, dist),
            };
            if ok {
                self.mate_left[x] = Some(y);
                self.mate_right[y] = Some(x);
                return true;
            }
        }
        dist[x] = usize::MAX;
        false
    }

    fn size(&self) -> usize {
        self.mate_left.iter().flatten().count()
    }
}

/// A maximum antichain together with a minimum chain partition of the same
/// size, which certifies optimality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DilworthWitness {
    pub antichain: Vec<usize>,
    pub chains: Vec<Vec<usize>>,
}

impl DilworthWitness {
    pub fn width(&self) -> usize {
        self.antichain.len()
    }
}

pub fn dilworth<T>(poset: &GradedPoset<T>) -> Result<DilworthWitness> {
    check_size(poset)?;
    let n = poset.len();
    let m = StrictMatching::solve(poset);

    // Chains: start at elements whose right copy is unmatched, follow mates.
    let mut chains = Vec::new();
    for start in 0..n {
        if m.mate_right[start].is_some() {
            continue;
        }
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(next) = m.mate_left[cur] {
            chain.push(next);
            cur = next;
        }
        chains.push(chain);
    }

    // König: alternating reachability from unmatched left vertices.
    let mut left_seen = vec![false; n];
    let mut right_seen = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&x| m.mate_left[x].is_none()).collect();
    for &x in &queue {
        left_seen[x] = true;
    }
    while let Some(x) = queue.pop_front() {
        for &y in &m.adj[x] {
            if right_seen[y] {
                continue;
            }
            right_seen[y] = true;
            if let Some(x2) = m.mate_right[y] {
                if !left_seen[x2] {
                    left_seen[x2] = true;
                    queue.push_back(x2);
                }
            }
        }
    }
    let antichain: Vec<usize> = (0..n).filter(|&x| left_seen[x] && !right_seen[x]).collect();

    if antichain.len() != n - m.size() || chains.len() != antichain.len() {
        return Err(Error::Consistency(format!(
            "Dilworth certificate mismatch: antichain {}, chains {}, n - matching {}",
            antichain.len(),
            chains.len(),
            n - m.size()
        )));
    }
    Ok(DilworthWitness { antichain, chains })
}

/// Size of a largest antichain.
pub fn max_antichain<T>(poset: &GradedPoset<T>) -> Result<usize> {
    Ok(dilworth(poset)?.width())
}

pub fn is_antichain<T>(poset: &GradedPoset<T>, members: &[usize]) -> bool {
    members.iter().enumerate().all(|(a, &x)| {
        members[a + 1..]
            .iter()
            .all(|&y| x != y && !poset.comparable(x, y))
    })
}

/// Number of elements in a longest chain.
pub fn longest_chain<T>(poset: &GradedPoset<T>) -> usize {
    let mut up: Vec<Vec<usize>> = vec![Vec::new(); poset.len()];
    for &(a, b) in poset.covers() {
        up[a].push(b);
    }
    let mut best = vec![1usize; poset.len()];
    for x in poset.linear_extension() {
        for &b in &up[x] {
            best[b] = best[b].max(best[x] + 1);
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[derive(Clone, Copy)]
struct Edge {
    to: usize,
    rev: usize,
    cap: i64,
    cost: i64,
}

struct Network {
    graph: Vec<Vec<Edge>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self {
            graph: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: i64, cost: i64) {
        let rev_from = self.graph[to].len();
        let rev_to = self.graph[from].len();
        self.graph[from].push(Edge {
            to,
            rev: rev_from,
            cap,
            cost,
        });
        self.graph[to].push(Edge {
            to: from,
            rev: rev_to,
            cap: 0,
            cost: -cost,
        });
    }

    /// Shortest distances with Bellman–Ford (queue variant); seeds potentials.
    fn bellman_ford(&self, source: usize) -> Vec<i64> {
        let n = self.graph.len();
        let mut dist = vec![i64::MAX; n];
        let mut queued = vec![false; n];
        let mut queue = VecDeque::from([source]);
        dist[source] = 0;
        queued[source] = true;
        while let Some(u) = queue.pop_front() {
            queued[u] = false;
            for e in &self.graph[u] {
                if e.cap > 0 && dist[u] + e.cost < dist[e.to] {
                    dist[e.to] = dist[u] + e.cost;
                    if !queued[e.to] {
                        queued[e.to] = true;
                        queue.push_back(e.to);
                    }
                }
            }
        }
        dist
    }
}

/// Increments `c_1, c_2 - c_1, ...` of the chain numbers, in order, stopping
/// after the first increment `<= floor`. The sequence is non-increasing.
fn chain_increments<T>(poset: &GradedPoset<T>, floor: usize) -> Vec<usize> {
    let n = poset.len();
    let source = 2 * n;
    let sink = 2 * n + 1;
    let inf = n as i64 + 1;
    let mut net = Network::new(2 * n + 2);
    for x in 0..n {
        let (x_in, x_out) = (2 * x, 2 * x + 1);
        net.add(source, x_in, inf, 0);
        net.add(x_in, x_out, 1, -1);
        // Passing through without counting x keeps chains contiguous along covers.
        net.add(x_in, x_out, inf, 0);
        net.add(x_out, sink, inf, 0);
    }
    for &(a, b) in poset.covers() {
        net.add(2 * a + 1, 2 * b, inf, 0);
    }

    let mut potential = net.bellman_ford(source);
    let mut increments = Vec::new();
    let nodes = net.graph.len();
    loop {
        let mut dist = vec![i64::MAX; nodes];
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; nodes];
        let mut heap = BinaryHeap::new();
        dist[source] = 0;
        heap.push(Reverse((0i64, source)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for (i, e) in net.graph[u].iter().enumerate() {
                if e.cap <= 0 {
                    continue;
                }
                let reduced = e.cost + potential[u] - potential[e.to];
                debug_assert!(reduced >= 0);
                let nd = d + reduced;
                if nd < dist[e.to] {
                    dist[e.to] = nd;
                    prev[e.to] = Some((u, i));
                    heap.push(Reverse((nd, e.to)));
                }
            }
        }
        if dist[sink] == i64::MAX {
            break;
        }
        for v in 0..nodes {
            if dist[v] != i64::MAX {
                potential[v] += dist[v];
            }
        }
        let path_cost = potential[sink] - potential[source];
        let gain = (-path_cost).max(0) as usize;
        if gain == 0 {
            break;
        }
        let mut v = sink;
        while let Some((u, i)) = prev[v] {
            let rev = net.graph[u][i].rev;
            net.graph[u][i].cap -= 1;
            net.graph[v][rev].cap += 1;
            v = u;
        }
        increments.push(gain);
        if gain <= floor {
            break;
        }
    }
    increments
}

/// Greene's chain numbers `c_0 = 0, c_1, c_2, ...`: the most elements
/// coverable by `m` disjoint chains, up to the point where they stop growing.
pub fn chain_numbers<T>(poset: &GradedPoset<T>) -> Result<Vec<usize>> {
    check_size(poset)?;
    let mut out = vec![0];
    for d in chain_increments(poset, 0) {
        out.push(out.last().unwrap() + d);
    }
    Ok(out)
}

/// Greene–Kleitman number `d_k`: the size of a largest union of `k` antichains.
pub fn max_k_antichain_union<T>(poset: &GradedPoset<T>, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::Validation("k must be at least 1".into()));
    }
    check_size(poset)?;
    let excess: usize = chain_increments(poset, k)
        .into_iter()
        .map(|d| d.saturating_sub(k))
        .sum();
    Ok(poset.len() - excess)
}

/// Sum of the `k` largest rank sizes, the value `d_k` takes in a k-Sperner poset.
pub fn top_rank_sum<T>(poset: &GradedPoset<T>, k: usize) -> usize {
    let mut sizes = poset.rank_sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes.into_iter().take(k).sum()
}

pub fn check_k_sperner<T>(poset: &GradedPoset<T>, k: usize) -> Result<bool> {
    Ok(max_k_antichain_union(poset, k)? == top_rank_sum(poset, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_poset_p;
    use proptest::prelude::*;

    // Longest chain inside the subset `mask`, elements visited in a linear extension.
    fn longest_chain_in(poset: &GradedPoset<u32>, ext: &[usize], mask: u32) -> usize {
        let n = poset.len();
        let mut best = vec![0usize; n];
        let mut top = 0;
        for (a, &x) in ext.iter().enumerate() {
            if mask >> x & 1 == 0 {
                continue;
            }
            best[x] = 1 + ext[..a]
                .iter()
                .filter(|&&w| mask >> w & 1 == 1 && poset.lt(w, x))
                .map(|&w| best[w])
                .max()
                .unwrap_or(0);
            top = top.max(best[x]);
        }
        top
    }

    // Largest subset with no chain longer than k, by exhaustion.
    fn brute_force_dk(poset: &GradedPoset<u32>, k: usize) -> usize {
        let ext = poset.linear_extension();
        (0u32..1 << poset.len())
            .filter(|&mask| longest_chain_in(poset, &ext, mask) <= k)
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    fn relabel<T: Sync>(poset: &GradedPoset<T>) -> GradedPoset<u32> {
        let n = poset.len() as u32;
        GradedPoset::from_order((0..n).collect(), |&a, &b| poset.leq(a as usize, b as usize))
    }

    fn random_poset(n: usize, bits: u64) -> GradedPoset<u32> {
        // Random DAG on 0..n (edges i -> j with i < j), then transitive closure.
        let mut reach = vec![vec![false; n]; n];
        let mut state = bits | 1;
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
            for slot in row.iter_mut().skip(i + 1) {
                // xorshift64; roughly one edge in four
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                *slot = state & 3 == 0;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        GradedPoset::from_order((0..n as u32).collect(), |&a, &b| {
            reach[a as usize][b as usize]
        })
    }

    #[test]
    fn p4_width_and_union_numbers() {
        let p = build_poset_p(4).unwrap();
        let w = dilworth(&p).unwrap();
        assert_eq!(w.width(), 6);
        assert!(is_antichain(&p, &w.antichain));
        let d: Vec<usize> = (1..=4)
            .map(|k| max_k_antichain_union(&p, k).unwrap())
            .collect();
        assert_eq!(d, vec![6, 12, 13, 14]);
        let small = relabel(&p);
        for k in 1..=4 {
            assert_eq!(brute_force_dk(&small, k), d[k - 1]);
        }
        for k in 1..=6 {
            assert!(check_k_sperner(&p, k).unwrap());
        }
    }

    #[test]
    fn chain_and_antichain_extremes() {
        let chain = GradedPoset::from_order((0..6u32).collect(), |a, b| a <= b);
        assert_eq!(max_antichain(&chain).unwrap(), 1);
        assert_eq!(longest_chain(&chain), 6);
        assert_eq!(chain_numbers(&chain).unwrap(), vec![0, 6]);
        for k in 1..=8 {
            assert_eq!(max_k_antichain_union(&chain, k).unwrap(), k.min(6));
        }
        let flat = GradedPoset::from_order((0..6u32).collect(), |a, b| a == b);
        assert_eq!(max_antichain(&flat).unwrap(), 6);
        assert_eq!(max_k_antichain_union(&flat, 1).unwrap(), 6);
        assert!(matches!(
            max_k_antichain_union(&flat, 0),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn longest_chain_bounds_union_numbers() {
        for n in 1..=5 {
            let p = build_poset_p(n).unwrap();
            let h = longest_chain(&p);
            assert_eq!(h, n);
            assert_eq!(max_k_antichain_union(&p, h).unwrap(), p.len());
            assert_eq!(max_k_antichain_union(&p, h + 3).unwrap(), p.len());
        }
    }

    #[test]
    fn dilworth_certificate_is_valid() {
        for n in 1..=6 {
            let p = build_poset_p(n).unwrap();
            let w = dilworth(&p).unwrap();
            assert!(is_antichain(&p, &w.antichain));
            let mut seen = vec![false; p.len()];
            for chain in &w.chains {
                for pair in chain.windows(2) {
                    assert!(p.lt(pair[0], pair[1]));
                }
                for &x in chain {
                    assert!(!std::mem::replace(&mut seen[x], true));
                }
            }
            assert!(seen.into_iter().all(|s| s));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn flow_matches_brute_force_on_random_posets(n in 1usize..=11, bits in any::<u64>()) {
            let poset = random_poset(n, bits);
            let w = dilworth(&poset).unwrap();
            prop_assert_eq!(w.width(), brute_force_dk(&poset, 1));
            for k in 1..=n {
                prop_assert_eq!(max_k_antichain_union(&poset, k).unwrap(), brute_force_dk(&poset, k));
            }
        }
    }
}
