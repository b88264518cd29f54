//! Two more decision-monotone recurrences: GLWS with a fixed number of
//! segments, and optimal binary search trees.

use std::time::Instant;

use rayon::prelude::*;

use crate::cost::{CostModel, Shape};
use crate::decisions::monotone_minima;
use crate::error::{DpError, Result};
use crate::types::{add, Cost, RoundStats, INF};

/// `D[i][k'] = min_{j < i} D[j][k' - 1] + w(j, i)` for `k' <= k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KGlwsTable {
    n: usize,
    k: usize,
    d: Vec<Cost>,
    best: Vec<usize>,
}

impl KGlwsTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// `D[i][kk]`, the cheapest split of states `0..=i` into `kk` segments.
    pub fn d(&self, i: usize, kk: usize) -> Cost {
        self.d[i * (self.k + 1) + kk]
    }

    /// Last cut of the optimal `kk`-segment split of `0..=i`.
    pub fn best(&self, i: usize, kk: usize) -> usize {
        self.best[i * (self.k + 1) + kk]
    }

    /// Cut points `0 = c_0 < ... < c_k = n` of the optimal solution.
    pub fn cuts(&self) -> Vec<usize> {
        if self.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.n];
        let mut i = self.n;
        for kk in (1..=self.k).rev() {
            i = self.best(i, kk);
            out.push(i);
        }
        out.reverse();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KGlws {
    pub cost: Cost,
    pub table: KGlwsTable,
    pub stats: RoundStats,
}

/// Exactly-`k`-segment GLWS under a convex cost, one column of the table per
/// round. A `k` larger than `n` has no solution and yields [`INF`] with an
/// empty table.
pub fn k_glws<M: CostModel + ?Sized>(model: &M, k: usize) -> Result<KGlws> {
    if model.shape() != Shape::Convex {
        return Err(DpError::invalid("k-GLWS needs a convex cost"));
    }
    if k == 0 {
        return Err(DpError::invalid("k must be at least 1"));
    }
    let n = model.len();
    let mut stats = RoundStats::default();
    if k > n {
        return Ok(KGlws {
            cost: INF,
            table: KGlwsTable {
                n,
                k,
                d: Vec::new(),
                best: Vec::new(),
            },
            stats,
        });
    }
    let w = k + 1;
    let mut d = vec![INF; (n + 1) * w];
    let mut best = vec![0usize; (n + 1) * w];
    d[0] = 0;
    for kk in 1..=k {
        let t0 = Instant::now();
        // Rows are states kk..=n, columns decisions kk-1..=n-1.
        let size = n - kk + 1;
        let prev = |j: usize| d[j * w + kk - 1];
        let eval = |r: usize, c: usize| {
            let (i, j) = (kk + r, kk - 1 + c);
            if j >= i {
                INF
            } else {
                add(prev(j), model.weight(j, i))
            }
        };
        let minima = monotone_minima(size, size, &eval, Shape::Convex);
        for (r, (c, v)) in minima.into_iter().enumerate() {
            d[(kk + r) * w + kk] = v;
            best[(kk + r) * w + kk] = kk - 1 + c;
        }
        stats.push_round(size, 0, t0.elapsed());
    }
    Ok(KGlws {
        cost: d[n * w + k],
        table: KGlwsTable { n, k, d, best },
        stats,
    })
}

/// Weights for an optimal binary search tree over keys `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstWeights {
    /// Access frequency of each key.
    Keys(Vec<Cost>),
    /// `2n + 1` weights interleaving gaps and keys, `q0, p1, q1, ..., pn, qn`.
    Gaps(Vec<Cost>),
}

impl ObstWeights {
    fn raw(&self) -> &[Cost] {
        match self {
            ObstWeights::Keys(v) | ObstWeights::Gaps(v) => v,
        }
    }

    pub fn keys(&self) -> Result<usize> {
        match self {
            ObstWeights::Keys(v) => Ok(v.len()),
            ObstWeights::Gaps(v) if v.len() % 2 == 1 => Ok(v.len() / 2),
            ObstWeights::Gaps(v) => Err(DpError::invalid(format!(
                "gap weights need odd length 2n+1, got {}",
                v.len()
            ))),
        }
    }

    fn validate(&self) -> Result<usize> {
        let n = self.keys()?;
        if let Some(x) = self.raw().iter().find(|&&x| x < 0) {
            return Err(DpError::invalid(format!("negative weight {x}")));
        }
        Ok(n)
    }

    /// Prefix sums from which [`span`](Self::span) is read.
    fn prefix(&self) -> Vec<Cost> {
        let mut p = vec![0; self.raw().len() + 1];
        for (k, &x) in self.raw().iter().enumerate() {
            p[k + 1] = p[k] + x;
        }
        p
    }
}

/// Cost table for keys `i..=j`, `1 <= i <= n + 1`, `i - 1 <= j <= n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstTable {
    n: usize,
    d: Vec<Cost>,
    best: Vec<usize>,
    gaps: bool,
    wsum: Vec<Cost>,
}

impl ObstTable {
    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.n + 1) + j
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self, i: usize, j: usize) -> Cost {
        self.d[self.idx(i, j)]
    }

    /// Root of keys `i..=j`, `i <= j`.
    pub fn best(&self, i: usize, j: usize) -> usize {
        self.best[self.idx(i, j)]
    }

    /// Weight of the span `i..=j`.
    pub fn span(&self, i: usize, j: usize) -> Cost {
        if self.gaps {
            self.wsum[2 * j + 1] - self.wsum[2 * (i - 1)]
        } else {
            self.wsum[j] - self.wsum[i - 1]
        }
    }

    /// Checks `best[i][j-1] <= best[i][j] <= best[i+1][j]` everywhere.
    pub fn knuth_monotone(&self) -> bool {
        (1..=self.n).all(|i| {
            (i + 1..=self.n).all(|j| {
                self.best(i, j - 1) <= self.best(i, j) && self.best(i, j) <= self.best(i + 1, j)
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obst {
    pub cost: Cost,
    pub table: ObstTable,
    pub stats: RoundStats,
}

/// Knuth's `O(n^2)` OBST. In parallel mode every span length is one round,
/// evaluated with a parallel loop; both modes give identical tables.
pub fn obst(weights: &ObstWeights, parallel: bool) -> Result<Obst> {
    let n = weights.validate()?;
    let mut t = ObstTable {
        n,
        d: vec![0; (n + 2) * (n + 1)],
        best: vec![0; (n + 2) * (n + 1)],
        gaps: matches!(weights, ObstWeights::Gaps(_)),
        wsum: weights.prefix(),
    };
    let mut stats = RoundStats::default();
    for i in 1..=n {
        let (ii, s) = (t.idx(i, i), t.span(i, i));
        t.d[ii] = s;
        t.best[ii] = i;
    }
    for delta in 1..n {
        let t0 = Instant::now();
        let cell = |i: usize| -> (Cost, usize) {
            let j = i + delta;
            let (lo, hi) = (t.best(i, j - 1), t.best(i + 1, j));
            let mut best = (INF, lo);
            for r in lo..=hi {
                let v = t.d(i, r - 1) + t.d(r + 1, j);
                if v < best.0 {
                    best = (v, r);
                }
            }
            (best.0 + t.span(i, j), best.1)
        };
        let row: Vec<(Cost, usize)> = if parallel {
            (1..=n - delta).into_par_iter().map(cell).collect()
        } else {
            (1..=n - delta).map(cell).collect()
        };
        for (k, (v, r)) in row.into_iter().enumerate() {
            let ix = t.idx(k + 1, k + 1 + delta);
            t.d[ix] = v;
            t.best[ix] = r;
        }
        stats.push_round(n - delta, 0, t0.elapsed());
    }
    let cost = if n == 0 { 0 } else { t.d(1, n) };
    Ok(Obst {
        cost,
        table: t,
        stats,
    })
}
