//! Longest increasing subsequence and sparse longest common subsequence by
//! rounds of prefix-minimum extraction from a static tournament tree.
//!
//! In round `r` every element that is no larger than everything still alive
//! before it has LIS value exactly `r`; removing those elements exposes the
//! next round. LCS reduces to the same procedure on the column indices of the
//! match pairs.

use std::collections::HashMap;
use std::hash::Hash;
use std::time::Instant;

use crate::error::{DpError, Result};
use crate::types::RoundStats;

/// Subtrees with at least this many leaves are extracted with a fork.
const PARALLEL_LEAVES: usize = 4096;

/// Static min-tournament over a key array with tombstoned leaves.
///
/// Nodes are stored in pre-order, so every subtree occupies a contiguous
/// slice: a node over `k` leaves takes `2k - 1` slots, its left child over
/// `k / 2` leaves follows immediately and the right child comes after that.
#[derive(Debug, Clone)]
pub struct TournamentTree<T> {
    nodes: Vec<Option<T>>,
    leaves: usize,
    live: usize,
}

#[inline]
fn min_opt<T: Ord + Copy>(a: Option<T>, b: Option<T>) -> Option<T> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// `key <= bound`, where a `None` bound is unbounded.
#[inline]
fn within<T: Ord>(key: &T, bound: &Option<T>) -> bool {
    bound.as_ref().is_none_or(|b| key <= b)
}

impl<T: Ord + Copy + Send + Sync> TournamentTree<T> {
    pub fn new(keys: &[T]) -> Self {
        let mut nodes = vec![None; (2 * keys.len()).saturating_sub(1)];
        if !keys.is_empty() {
            build(&mut nodes, keys);
        }
        TournamentTree {
            nodes,
            leaves: keys.len(),
            live: keys.len(),
        }
    }

    pub fn len(&self) -> usize {
        self.leaves
    }

    pub fn is_empty(&self) -> bool {
        self.leaves == 0
    }

    /// Number of leaves not yet removed.
    pub fn live(&self) -> usize {
        self.live
    }

    /// Minimum over live leaves.
    pub fn min(&self) -> Option<T> {
        self.nodes.first().copied().flatten()
    }

    /// Removes and returns, in index order, every live leaf whose key is `<=`
    /// all live keys before it.
    pub fn extract_prefix_min_records(&mut self) -> Vec<usize> {
        if self.live == 0 {
            return Vec::new();
        }
        let out = extract(&mut self.nodes, 0, self.leaves, None);
        self.live -= out.len();
        out
    }

    /// Recomputes every internal node and compares; `false` on any mismatch.
    pub fn audit(&self) -> bool {
        self.leaves == 0 || audit(&self.nodes, self.leaves).is_some()
    }
}

fn build<T: Ord + Copy + Send + Sync>(nodes: &mut [Option<T>], keys: &[T]) {
    if keys.len() == 1 {
        nodes[0] = Some(keys[0]);
        return;
    }
    let kl = keys.len() / 2;
    let (head, rest) = nodes.split_at_mut(1);
    let (left, right) = rest.split_at_mut(2 * kl - 1);
    if keys.len() >= PARALLEL_LEAVES {
        rayon::join(|| build(left, &keys[..kl]), || build(right, &keys[kl..]));
    } else {
        build(left, &keys[..kl]);
        build(right, &keys[kl..]);
    }
    head[0] = min_opt(left[0], right[0]);
}

/// Leaf indices `offset..offset + k` live under `nodes`.
fn extract<T: Ord + Copy + Send + Sync>(
    nodes: &mut [Option<T>],
    offset: usize,
    k: usize,
    bound: Option<T>,
) -> Vec<usize> {
    match nodes[0] {
        None => return Vec::new(),
        Some(m) if !within(&m, &bound) => return Vec::new(),
        _ => {}
    }
    if k == 1 {
        nodes[0] = None;
        return vec![offset];
    }
    let kl = k / 2;
    let (head, rest) = nodes.split_at_mut(1);
    let (left, right) = rest.split_at_mut(2 * kl - 1);
    let right_bound = min_opt(bound, left[0]);
    let (mut a, b) = if k >= PARALLEL_LEAVES {
        rayon::join(
            || extract(left, offset, kl, bound),
            || extract(right, offset + kl, k - kl, right_bound),
        )
    } else {
        (
            extract(left, offset, kl, bound),
            extract(right, offset + kl, k - kl, right_bound),
        )
    };
    head[0] = min_opt(left[0], right[0]);
    a.extend(b);
    a
}

/// Returns the subtree minimum when consistent.
fn audit<T: Ord + Copy>(nodes: &[Option<T>], k: usize) -> Option<Option<T>> {
    if k == 1 {
        return Some(nodes[0]);
    }
    let kl = k / 2;
    let l = audit(&nodes[1..2 * kl], kl)?;
    let r = audit(&nodes[2 * kl..], k - kl)?;
    let m = min_opt(l, r);
    (m == nodes[0]).then_some(m)
}

/// Result of a round-based sequence solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRounds {
    /// Subsequence length, equal to the number of rounds.
    pub k: usize,
    /// 1-based round in which each element was extracted; for LIS this is
    /// the length of the longest increasing subsequence ending there.
    pub round_of: Vec<usize>,
    pub stats: RoundStats,
}

fn rounds_of<T: Ord + Copy + Send + Sync>(keys: &[T]) -> SequenceRounds {
    let mut tree = TournamentTree::new(keys);
    let mut round_of = vec![0; keys.len()];
    let mut stats = RoundStats::default();
    while tree.live() > 0 {
        let t0 = Instant::now();
        let recs = tree.extract_prefix_min_records();
        let r = stats.rounds + 1;
        for &i in &recs {
            round_of[i] = r;
        }
        stats.push_round(recs.len(), 0, t0.elapsed());
    }
    SequenceRounds {
        k: stats.rounds,
        round_of,
        stats,
    }
}

/// Longest strictly increasing subsequence.
pub fn lis<T: Ord + Copy + Send + Sync>(a: &[T]) -> SequenceRounds {
    rounds_of(a)
}

/// Indices of one longest strictly increasing subsequence, recovered
/// backwards from the round numbers.
pub fn lis_witness<T: Ord>(a: &[T], round_of: &[usize]) -> Vec<usize> {
    let Some(k) = round_of.iter().copied().max() else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(k);
    let mut p = round_of
        .iter()
        .rposition(|&r| r == k)
        .expect("max is attained");
    out.push(p);
    for r in (1..k).rev() {
        p = (0..p)
            .rev()
            .find(|&q| round_of[q] == r && a[q] < a[p])
            .expect("an element of the previous round precedes every record");
        out.push(p);
    }
    out.reverse();
    out
}

/// Matching pairs `(i, j)` with `A[i] = B[j]`, 1-based, sorted by `i`
/// ascending then `j` descending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatchList {
    pairs: Vec<(usize, usize)>,
}

impl MatchList {
    /// Validates order and uniqueness.
    pub fn from_pairs(pairs: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(p) = pairs.iter().find(|p| p.0 == 0 || p.1 == 0) {
            return Err(DpError::invalid(format!("pair {p:?} is not 1-based")));
        }
        for w in pairs.windows(2) {
            let ordered = w[0].0 < w[1].0 || (w[0].0 == w[1].0 && w[0].1 > w[1].1);
            if !ordered {
                return Err(DpError::invalid(format!(
                    "pairs {:?} and {:?} are not sorted by (i asc, j desc)",
                    w[0], w[1]
                )));
            }
        }
        Ok(MatchList { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn columns(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }
}

pub fn build_match_list<T: Eq + Hash>(a: &[T], b: &[T]) -> MatchList {
    let mut positions: HashMap<&T, Vec<usize>> = HashMap::new();
    for (j, y) in b.iter().enumerate() {
        positions.entry(y).or_default().push(j + 1);
    }
    let mut pairs = Vec::new();
    for (i, x) in a.iter().enumerate() {
        if let Some(js) = positions.get(x) {
            pairs.extend(js.iter().rev().map(|&j| (i + 1, j)));
        }
    }
    MatchList { pairs }
}

/// LCS length from a match list. `stats.frontier_sizes` is the number of
/// pairs on each round's cordon.
pub fn sparse_lcs(m: &MatchList) -> SequenceRounds {
    // Narrow keys halve the tree for large match lists.
    match m.pairs.iter().map(|p| p.1).max() {
        Some(j) if j <= u32::MAX as usize => {
            let cols: Vec<u32> = m.pairs.iter().map(|p| p.1 as u32).collect();
            rounds_of(&cols)
        }
        _ => rounds_of(&m.columns()),
    }
}

/// One LCS as a chain of match pairs.
pub fn lcs_witness(m: &MatchList, round_of: &[usize]) -> Vec<(usize, usize)> {
    let cols = m.columns();
    lis_witness(&cols, round_of)
        .into_iter()
        .map(|p| m.pairs[p])
        .collect()
}
