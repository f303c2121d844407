//! The bijection between noncrossing partitions of `{1..n}` and 132-avoiding
//! permutations of `{1..n}`.
//!
//! Let `k` be the largest element in the block of 1. The image places `n` at
//! position `k`; the restriction to `{1..k-1}` is encoded recursively and
//! shifted up onto `{n-k+1..n-1}` to the left of `n`, and the restriction to
//! `{k+1..n}` is encoded onto `{1..n-k}` to the right. Descents of the image
//! sit exactly one step before the block minima other than 1.

use crate::error::{Error, Result};
use crate::partition::NoncrossingPartition;
use crate::perm::Permutation;

fn encode(labels: &[usize]) -> Vec<usize> {
    let m = labels.len();
    if m == 0 {
        return Vec::new();
    }
    // 1-based k is idx + 1.
    let idx = labels
        .iter()
        .rposition(|&l| l == labels[0])
        .expect("labels[0] matches itself");
    let k = idx + 1;
    let mut out: Vec<usize> = encode(&labels[..idx])
        .into_iter()
        .map(|v| v + (m - k))
        .collect();
    out.push(m);
    out.extend(encode(&labels[k..]));
    out
}

/// Fills `labels` (same length as `entries`) with block ids starting at
/// `*next_id`. `entries` must be a 132-avoiding arrangement of `{1..len}`.
fn decode(entries: &[usize], labels: &mut [usize], next_id: &mut usize) {
    let m = entries.len();
    if m == 0 {
        return;
    }
    let idx = entries
        .iter()
        .position(|&v| v == m)
        .expect("maximum is present");
    let k = idx + 1;
    let left: Vec<usize> = entries[..idx].iter().map(|&v| v - (m - k)).collect();
    decode(&left, &mut labels[..idx], next_id);
    labels[idx] = if idx == 0 {
        *next_id += 1;
        *next_id - 1
    } else {
        labels[0]
    };
    decode(&entries[k..], &mut labels[k..], next_id);
}

/// Maps a noncrossing partition to its 132-avoiding permutation.
pub fn ncp_to_perm(q: &NoncrossingPartition) -> Permutation {
    Permutation::from_entries_unchecked(encode(&q.labels()))
}

/// Inverse of [`ncp_to_perm`]. Permutations containing 132 are a domain error.
pub fn perm_to_ncp(p: &Permutation) -> Result<NoncrossingPartition> {
    if !p.is_132_avoiding() {
        return Err(Error::Domain(format!(
            "{p} contains the pattern 132 and has no preimage"
        )));
    }
    let mut labels = vec![0; p.n()];
    let mut next_id = 0;
    decode(p.entries(), &mut labels, &mut next_id);
    Ok(NoncrossingPartition::from_labels_unchecked(&labels))
}

/// Validates a candidate block list and then applies [`ncp_to_perm`].
pub fn blocks_to_perm(blocks: Vec<Vec<usize>>) -> Result<Permutation> {
    Ok(ncp_to_perm(&NoncrossingPartition::from_blocks(blocks)?))
}
