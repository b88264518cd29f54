//! Shared vocabulary: DP values, round statistics and the two depth measures
//! used to check round counts.
//!
//! States are numbered `0..=n` with state `0` the boundary. Arrays of best
//! decisions passed to the depth functions are indexed from state `1`, so
//! `best[k]` is the decision of state `k + 1`.

use std::time::Duration;

use crate::error::{DpError, Result};

/// A DP value. Costs are exact 64-bit integers.
pub type Cost = i64;

/// The "no path" value. Absorbing under [`add`] and larger than every finite
/// cost that can arise from finite inputs.
pub const INF: Cost = i64::MAX / 4;

/// Saturating addition that keeps [`INF`] absorbing.
#[inline]
pub fn add(a: Cost, b: Cost) -> Cost {
    if a >= INF || b >= INF {
        INF
    } else {
        (a + b).min(INF)
    }
}

/// Per-round instrumentation of a phase-parallel run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoundStats {
    pub rounds: usize,
    pub frontier_sizes: Vec<usize>,
    /// States whose tentative value was computed during frontier detection but
    /// which were not finalized in that round.
    pub wasted_states: usize,
    pub wasted_per_round: Vec<usize>,
    pub elapsed_per_round: Vec<Duration>,
}

impl RoundStats {
    pub(crate) fn push_round(&mut self, frontier: usize, wasted: usize, elapsed: Duration) {
        self.rounds += 1;
        self.frontier_sizes.push(frontier);
        self.wasted_states += wasted;
        self.wasted_per_round.push(wasted);
        self.elapsed_per_round.push(elapsed);
    }

    pub fn finalized(&self) -> usize {
        self.frontier_sizes.iter().sum()
    }
}

/// Depth of the best-decision DAG and of the optimized DAG for one solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthReport {
    pub perfect_depth: usize,
    pub effective_depth: usize,
}

impl DepthReport {
    pub fn from_best(best: &[usize]) -> Result<Self> {
        Ok(DepthReport {
            perfect_depth: perfect_depth(best)?,
            effective_depth: effective_depth_glws(best)?,
        })
    }
}

fn validate(best: &[usize]) -> Result<()> {
    for (k, &b) in best.iter().enumerate() {
        let state = k + 1;
        if b >= state {
            return Err(DpError::invalid(format!(
                "best[{state}] = {b} is not an earlier state"
            )));
        }
    }
    Ok(())
}

/// Longest chain `i -> best[i] -> ... -> 0`, counted in edges.
pub fn perfect_depth(best: &[usize]) -> Result<usize> {
    validate(best)?;
    let mut depth = vec![0usize; best.len() + 1];
    let mut max = 0;
    for (k, &b) in best.iter().enumerate() {
        depth[k + 1] = depth[b] + 1;
        max = max.max(depth[k + 1]);
    }
    Ok(max)
}

/// Largest number of best-decision edges on any path of the GLWS DAG, where
/// every `j < i` is also joined by a normal edge. Normal edges make the depth
/// monotone in `i`, which gives `ed(i) = max(ed(i - 1), ed(best[i]) + 1)`.
pub fn effective_depth_glws(best: &[usize]) -> Result<usize> {
    validate(best)?;
    let mut ed = vec![0usize; best.len() + 1];
    for (k, &b) in best.iter().enumerate() {
        ed[k + 1] = ed[k].max(ed[b] + 1);
    }
    Ok(ed[best.len()])
}
