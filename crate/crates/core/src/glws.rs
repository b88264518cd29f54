//! Generalized least-weight subsequence: `D[i] = min_{j<i} E[j] + w(j, i)`.
//!
//! [`glws_seq`] is the classic monotonic-deque scan. [`glws_par`] is the
//! cordon algorithm: each round finds, by prefix doubling, the longest run of
//! states after `now` whose best decision is already finalized, commits them
//! together and refreshes the compressed best-decision structure.

use std::collections::VecDeque;
use std::time::Instant;

use rayon::prelude::*;

use crate::cost::{CostModel, Shape};
use crate::decisions::{
    find_intervals, first_relaxed, merge_decisions, DecisionIntervals, Segment,
};
use crate::error::{DpError, Result};
use crate::types::{add, Cost, RoundStats};

/// Batches of at least this many states are evaluated in parallel.
const PARALLEL_BATCH: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlwsSolution {
    /// `values[i] = D[i]` for `i` in `0..=n`, with `values[0] = D0`.
    values: Vec<Cost>,
    /// `decisions[i] = best[i]`; `decisions[0]` is unused and zero.
    decisions: Vec<usize>,
    pub stats: Option<RoundStats>,
}

impl GlwsSolution {
    pub fn from_parts(
        values: Vec<Cost>,
        decisions: Vec<usize>,
        stats: Option<RoundStats>,
    ) -> Result<Self> {
        if values.is_empty() || values.len() != decisions.len() {
            return Err(DpError::invalid(format!(
                "solution arrays have lengths {} and {}",
                values.len(),
                decisions.len()
            )));
        }
        Ok(GlwsSolution {
            values,
            decisions,
            stats,
        })
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    /// `D[1..=n]`.
    pub fn values(&self) -> &[Cost] {
        &self.values[1..]
    }

    /// `best[1..=n]`, in the layout the depth functions expect.
    pub fn best(&self) -> &[usize] {
        &self.decisions[1..]
    }

    /// `D[i]` for `i` in `0..=n`.
    pub fn value(&self, i: usize) -> Cost {
        self.values[i]
    }

    pub fn decision(&self, i: usize) -> usize {
        self.decisions[i]
    }

    /// Final value `D[n]`.
    pub fn last(&self) -> Cost {
        *self.values.last().expect("values include D0")
    }

    /// Boundary-to-`n` chain of decisions, `0 = p_0 < p_1 < ... < p_k = n`.
    pub fn path(&self) -> Vec<usize> {
        let mut out = vec![self.n()];
        let mut i = self.n();
        while i > 0 {
            i = self.decisions[i];
            out.push(i);
        }
        out.reverse();
        out
    }

    /// Checks `D[i] = E[best[i]] + w(best[i], i)` and `D[i] <= E[j] + w(j, i)`
    /// for every `j < i`. Quadratic; meant for tests and `--verify`.
    pub fn verify<M: CostModel + ?Sized>(&self, model: &M) -> Result<()> {
        if self.n() != model.len() {
            return Err(DpError::invalid(format!(
                "solution has n = {}, model {}",
                self.n(),
                model.len()
            )));
        }
        let e: Vec<Cost> = (0..=self.n())
            .map(|j| model.transform(self.values[j], j))
            .collect();
        for i in 1..=self.n() {
            let b = self.decisions[i];
            if b >= i || add(e[b], model.weight(b, i)) != self.values[i] {
                return Err(DpError::Internal(format!(
                    "state {i}: value does not match decision {b}"
                )));
            }
            if let Some(j) = (0..i).find(|&j| add(e[j], model.weight(j, i)) < self.values[i]) {
                return Err(DpError::Internal(format!(
                    "state {i}: decision {j} is better"
                )));
            }
        }
        Ok(())
    }
}

fn empty_solution(d0: Cost, stats: Option<RoundStats>) -> GlwsSolution {
    GlwsSolution {
        values: vec![d0],
        decisions: vec![0],
        stats,
    }
}

/// Sequential `O(n log n)` scan with a deque of decision segments.
pub fn glws_seq<M: CostModel + ?Sized>(model: &M, d0: Cost) -> GlwsSolution {
    let n = model.len();
    if n == 0 {
        return empty_solution(d0, None);
    }
    let shape = model.shape();
    let mut values = vec![0; n + 1];
    let mut decisions = vec![0; n + 1];
    let mut e = vec![0; n + 1];
    values[0] = d0;
    e[0] = model.transform(d0, 0);
    let mut dq: VecDeque<Segment> = VecDeque::from([Segment::new(1, n, 0)]);

    for i in 1..=n {
        while dq.front().is_some_and(|s| s.hi < i) {
            dq.pop_front();
        }
        let b = dq
            .front()
            .expect("segments cover every open state")
            .decision;
        values[i] = add(e[b], model.weight(b, i));
        decisions[i] = b;
        if i == n {
            break;
        }
        e[i] = model.transform(values[i], i);
        if let Some(front) = dq.front_mut() {
            front.lo = front.lo.max(i + 1);
            if front.lo > front.hi {
                dq.pop_front();
            }
        }
        let ei = e[i];
        let wins = |s: usize, d: usize| add(ei, model.weight(i, s)) < add(e[d], model.weight(d, s));

        match shape {
            Shape::Convex => {
                // i takes over a suffix of the open states.
                let mut from = n + 1;
                while let Some(&back) = dq.back() {
                    if wins(back.lo, back.decision) {
                        from = back.lo;
                        dq.pop_back();
                    } else {
                        break;
                    }
                }
                if let Some(back) = dq.back_mut() {
                    if wins(back.hi, back.decision) {
                        let (mut lo, mut hi) = (back.lo + 1, back.hi);
                        while lo < hi {
                            let mid = lo + (hi - lo) / 2;
                            if wins(mid, back.decision) {
                                hi = mid;
                            } else {
                                lo = mid + 1;
                            }
                        }
                        back.hi = lo - 1;
                        from = lo;
                    }
                }
                if from <= n {
                    dq.push_back(Segment::new(from, n, i));
                }
            }
            Shape::Concave => {
                // i takes over a prefix of the open states.
                let mut to = i;
                while let Some(&front) = dq.front() {
                    if wins(front.hi, front.decision) {
                        to = front.hi;
                        dq.pop_front();
                    } else {
                        break;
                    }
                }
                if let Some(front) = dq.front_mut() {
                    if wins(front.lo, front.decision) {
                        let (mut lo, mut hi) = (front.lo, front.hi - 1);
                        while lo < hi {
                            let mid = lo + (hi - lo).div_ceil(2);
                            if wins(mid, front.decision) {
                                lo = mid;
                            } else {
                                hi = mid - 1;
                            }
                        }
                        front.lo = lo + 1;
                        to = lo;
                    }
                }
                if to > i {
                    dq.push_front(Segment::new(i + 1, to, i));
                }
            }
        }
    }
    GlwsSolution {
        values,
        decisions,
        stats: None,
    }
}

/// Outcome of one frontier search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cordon {
    /// First state that is not ready; `n + 1` when every open state is.
    pub cordon: usize,
    /// `D` for states `now + 1 ..= cordon - 1`.
    pub values: Vec<Cost>,
    /// Decisions for the same states.
    pub decisions: Vec<usize>,
    /// Tentative states evaluated, including discarded ones.
    pub examined: usize,
}

/// Finds the cordon after `now` by prefix doubling.
///
/// `e[j]` must hold `E[j]` for every finalized `j <= now`, and `b` the best
/// finalized decision for every state in `now + 1 ..= n`.
pub fn find_cordon<M: CostModel + ?Sized>(
    model: &M,
    e: &[Cost],
    b: &DecisionIntervals,
    now: usize,
) -> Cordon {
    let n = model.len();
    let mut cordon = n + 1;
    let mut values = Vec::new();
    let mut decisions = Vec::new();
    let mut examined = 0;
    let shape = model.shape();
    let current = |d: usize, s: usize| add(e[d], model.weight(d, s));

    let mut t = 1u32;
    while now + (1usize << (t - 1)) <= n {
        let l = now + (1usize << (t - 1));
        let r = n.min(now + (1usize << t) - 1);
        let eval_state = |j: usize| {
            let bj = b.decision_at(j);
            let dj = current(bj, j);
            let ej = model.transform(dj, j);
            let sentinel = match shape {
                Shape::Convex => first_relaxed(b, j + 1, |s| add(ej, model.weight(j, s)), current),
                Shape::Concave => (j < n
                    && add(ej, model.weight(j, j + 1)) < current(b.decision_at(j + 1), j + 1))
                .then_some(j + 1),
            };
            (dj, bj, sentinel.unwrap_or(n + 1))
        };
        let batch: Vec<(Cost, usize, usize)> = if r - l + 1 >= PARALLEL_BATCH {
            (l..=r).into_par_iter().map(eval_state).collect()
        } else {
            (l..=r).map(eval_state).collect()
        };
        examined += batch.len();
        for &(d, bj, s) in &batch {
            values.push(d);
            decisions.push(bj);
            cordon = cordon.min(s);
        }
        if cordon <= r + 1 {
            break;
        }
        t += 1;
    }
    let keep = cordon.saturating_sub(now + 1).min(values.len());
    values.truncate(keep);
    decisions.truncate(keep);
    Cordon {
        cordon,
        values,
        decisions,
        examined,
    }
}

/// Parallel cordon GLWS. Output is identical to [`glws_seq`]; round
/// statistics are attached.
///
/// Returns an internal error if a round makes no progress, which only
/// happens when the model does not satisfy its declared shape.
pub fn glws_par<M: CostModel + ?Sized>(model: &M, d0: Cost) -> Result<GlwsSolution> {
    let n = model.len();
    let mut stats = RoundStats::default();
    if n == 0 {
        return Ok(empty_solution(d0, Some(stats)));
    }
    let shape = model.shape();
    let mut values = vec![0; n + 1];
    let mut decisions = vec![0; n + 1];
    let mut e = vec![0; n + 1];
    values[0] = d0;
    e[0] = model.transform(d0, 0);
    let mut b = DecisionIntervals::single(1, n, 0);
    let mut now = 0;

    while now < n {
        let t0 = Instant::now();
        let found = find_cordon(model, &e, &b, now);
        let cordon = found.cordon;
        if cordon <= now + 1 {
            return Err(DpError::Internal(format!(
                "no progress after state {now}; the cost does not look {shape}"
            )));
        }
        let frontier = cordon - 1 - now;
        for (k, (&d, &bj)) in found.values.iter().zip(&found.decisions).enumerate() {
            let i = now + 1 + k;
            values[i] = d;
            decisions[i] = bj;
            e[i] = model.transform(d, i);
        }
        if cordon <= n {
            let eval = |j: usize, i: usize| add(e[j], model.weight(j, i));
            let fresh = find_intervals(&eval, shape, now + 1, cordon - 1, cordon, n)?;
            b = match shape {
                Shape::Convex => fresh,
                Shape::Concave => {
                    b.trim_front(cordon);
                    merge_decisions(&eval, shape, &b, &fresh)?
                }
            };
        }
        stats.push_round(frontier, found.examined - frontier, t0.elapsed());
        now = cordon - 1;
    }
    Ok(GlwsSolution {
        values,
        decisions,
        stats: Some(stats),
    })
}
