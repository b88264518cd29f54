//! GAP edit distance with convex or concave gap penalties.
//!
//! ```text
//! P[i][j] = min_{i' < i} D[i'][j] + w1(i', i)
//! Q[i][j] = min_{j' < j} D[i][j'] + w2(j', j)
//! D[i][j] = min(P[i][j], Q[i][j], D[i-1][j-1] if A[i] = B[j])
//! ```
//!
//! Every column is a GLWS instance for `P` and every row one for `Q`. The
//! parallel solver keeps the finalized region as a staircase (a finalized
//! prefix per row, non-increasing down the rows) and advances it in rounds.
//! In a round all rows extend a tentative range by prefix doubling in
//! lockstep; cells that could still be improved by a tentative cell become
//! sentinels, and everything to the lower right of a sentinel waits for the
//! next round.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::cost::{monge_check, CostModel, Shape};
use crate::decisions::{find_intervals, first_relaxed, merge_decisions, DecisionIntervals};
use crate::error::{DpError, Result};
use crate::types::{add, Cost, RoundStats, INF};

/// Marker for "no decision" in the best-decision tables.
const NONE: u32 = u32::MAX;

/// Rows per parallel task when extending tentative ranges.
const ROW_GRAIN: usize = 16;

/// Samples used to sanity-check declared cost shapes.
const MONGE_SAMPLES: usize = 512;

/// Sentinels found while scanning one row: the row, its own earliest
/// sentinel column, and `(row, column)` sentinels placed through columns.
type RowScan = (usize, usize, Vec<(usize, usize)>);

pub struct GapInstance<W1, W2> {
    a: Vec<u32>,
    b: Vec<u32>,
    w1: W1,
    w2: W2,
}

impl<W1: CostModel, W2: CostModel> GapInstance<W1, W2> {
    /// `w1` prices deleting a run of `a` (`w1.len() == a.len()`), `w2` a run
    /// of `b`. Both are spot-checked against their declared shape.
    pub fn new(a: Vec<u32>, b: Vec<u32>, w1: W1, w2: W2) -> Result<Self> {
        if w1.len() != a.len() || w2.len() != b.len() {
            return Err(DpError::invalid(format!(
                "cost lengths ({}, {}) do not match sequence lengths ({}, {})",
                w1.len(),
                w2.len(),
                a.len(),
                b.len()
            )));
        }
        for (name, report) in [
            ("w1", monge_check(&w1, MONGE_SAMPLES, 1)),
            ("w2", monge_check(&w2, MONGE_SAMPLES, 2)),
        ] {
            if !report.is_ok() {
                return Err(DpError::invalid(format!(
                    "{name} violates its declared shape: {report:?}"
                )));
            }
        }
        Ok(GapInstance { a, b, w1, w2 })
    }

    pub fn from_bytes(a: &[u8], b: &[u8], w1: W1, w2: W2) -> Result<Self> {
        Self::new(
            a.iter().map(|&x| x as u32).collect(),
            b.iter().map(|&x| x as u32).collect(),
            w1,
            w2,
        )
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    pub fn b(&self) -> &[u32] {
        &self.b
    }

    pub fn w1(&self) -> &W1 {
        &self.w1
    }

    pub fn w2(&self) -> &W2 {
        &self.w2
    }
}

/// Per-row finalized prefix lengths: cells `(i, 0..frontier[i])` are final.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    frontier: Vec<usize>,
}

impl Staircase {
    fn initial(n: usize) -> Self {
        let mut frontier = vec![0; n + 1];
        frontier[0] = 1;
        Staircase { frontier }
    }

    pub fn frontier(&self) -> &[usize] {
        &self.frontier
    }

    pub fn is_monotone(&self) -> bool {
        self.frontier.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_final(&self, i: usize, j: usize) -> bool {
        j < self.frontier[i]
    }

    /// Finalized prefix length of every column, `0..=m`.
    pub fn column_frontier(&self, m: usize) -> Vec<usize> {
        let mut out = vec![0; m + 1];
        let mut i = self.frontier.len();
        for (j, slot) in out.iter_mut().enumerate() {
            while i > 0 && self.frontier[i - 1] <= j {
                i -= 1;
            }
            *slot = i;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSolution {
    n: usize,
    m: usize,
    d: Vec<Cost>,
    best_p: Vec<u32>,
    best_q: Vec<u32>,
    pub stats: RoundStats,
}

impl GapSolution {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self, i: usize, j: usize) -> Cost {
        self.d[i * (self.m + 1) + j]
    }

    /// Final distance `D[n][m]`.
    pub fn distance(&self) -> Cost {
        self.d(self.n, self.m)
    }

    /// Row-major `(n + 1) x (m + 1)` table.
    pub fn table(&self) -> &[Cost] {
        &self.d
    }

    /// Best row for `P[i][j]`.
    pub fn best_p(&self, i: usize, j: usize) -> Option<usize> {
        let v = self.best_p[i * (self.m + 1) + j];
        (v != NONE).then_some(v as usize)
    }

    /// Best column for `Q[i][j]`.
    pub fn best_q(&self, i: usize, j: usize) -> Option<usize> {
        let v = self.best_q[i * (self.m + 1) + j];
        (v != NONE).then_some(v as usize)
    }

    fn transposed(self) -> Self {
        let (n, m) = (self.n, self.m);
        let t = |v: &[u32]| -> Vec<u32> {
            let mut out = vec![0; v.len()];
            for i in 0..=n {
                for j in 0..=m {
                    out[j * (n + 1) + i] = v[i * (m + 1) + j];
                }
            }
            out
        };
        let mut d = vec![0; self.d.len()];
        for i in 0..=n {
            for j in 0..=m {
                d[j * (n + 1) + i] = self.d[i * (m + 1) + j];
            }
        }
        GapSolution {
            n: m,
            m: n,
            d,
            best_p: t(&self.best_q),
            best_q: t(&self.best_p),
            stats: self.stats,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Tentative {
    d: Cost,
    bp: u32,
    bq: u32,
}

/// Solves the instance. When `b` is longer than `a` the problem is solved
/// transposed, with the two cost models swapped, and transposed back.
pub fn gap_solve<W1: CostModel, W2: CostModel>(inst: &GapInstance<W1, W2>) -> Result<GapSolution> {
    if inst.b.len() > inst.a.len() {
        Ok(Solver::new(&inst.b, &inst.a, &inst.w2, &inst.w1)?
            .run()?
            .transposed())
    } else {
        Solver::new(&inst.a, &inst.b, &inst.w1, &inst.w2)?.run()
    }
}

fn to_u32(x: usize) -> Result<u32> {
    u32::try_from(x)
        .ok()
        .filter(|&v| v != NONE)
        .ok_or_else(|| DpError::invalid(format!("dimension {x} exceeds the supported range")))
}

struct Solver<'a> {
    a: &'a [u32],
    b: &'a [u32],
    w1: &'a dyn CostModel,
    w2: &'a dyn CostModel,
    n: usize,
    m: usize,
    /// Column positions (1-based) of each symbol in `b`, ascending.
    positions: HashMap<u32, Vec<usize>>,
}

impl<'a> Solver<'a> {
    fn new(
        a: &'a [u32],
        b: &'a [u32],
        w1: &'a dyn CostModel,
        w2: &'a dyn CostModel,
    ) -> Result<Self> {
        let (n, m) = (a.len(), b.len());
        to_u32(n.max(m) + 1)?;
        let mut positions: HashMap<u32, Vec<usize>> = HashMap::new();
        for (j, &y) in b.iter().enumerate() {
            positions.entry(y).or_default().push(j + 1);
        }
        Ok(Solver {
            a,
            b,
            w1,
            w2,
            n,
            m,
            positions,
        })
    }

    fn run(&self) -> Result<GapSolution> {
        let (n, m) = (self.n, self.m);
        let cols = m + 1;
        let mut d = vec![INF; (n + 1) * cols];
        let mut best_p = vec![NONE; (n + 1) * cols];
        let mut best_q = vec![NONE; (n + 1) * cols];
        d[0] = 0;
        let mut stairs = Staircase::initial(n);
        let mut fc = stairs.column_frontier(m);
        let mut bcol: Vec<DecisionIntervals> = (0..=m)
            .map(|j| {
                if j == 0 {
                    DecisionIntervals::single(1, n, 0)
                } else {
                    DecisionIntervals::empty()
                }
            })
            .collect();
        let mut brow: Vec<DecisionIntervals> = (0..=n)
            .map(|i| {
                if i == 0 {
                    DecisionIntervals::single(1, m, 0)
                } else {
                    DecisionIntervals::empty()
                }
            })
            .collect();
        let empty: Vec<usize> = Vec::new();
        let row_matches: Vec<&[usize]> = (0..=n)
            .map(|i| {
                if i == 0 {
                    &empty[..]
                } else {
                    self.positions
                        .get(&self.a[i - 1])
                        .map_or(&empty[..], |v| &v[..])
                }
            })
            .collect();
        let mut stats = RoundStats::default();
        let mut bufs: Vec<Vec<Tentative>> = vec![Vec::new(); n + 1];

        while stairs.frontier.iter().any(|&f| f <= m) {
            let t0 = Instant::now();
            let fr = &stairs.frontier;
            let view = View {
                s: self,
                d: &d,
                fr,
                bcol: &bcol,
                brow: &brow,
            };

            // Matches whose diagonal predecessor is not final yet.
            let mut smin: Vec<usize> = (0..=n)
                .map(|i| {
                    if i == 0 || fr[i] > m {
                        return m + 1;
                    }
                    let x = fr[i].max(fr[i - 1] + 1);
                    let p = row_matches[i];
                    p.get(p.partition_point(|&j| j < x))
                        .copied()
                        .unwrap_or(m + 1)
                })
                .collect();
            let mut cordon = prefix_min(&smin);
            for buf in bufs.iter_mut() {
                buf.clear();
            }
            let mut examined = vec![0usize; n + 1];
            let mut t = 0u32;
            loop {
                let open: Vec<usize> = (0..=n)
                    .filter(|&i| fr[i] + examined[i] < cordon[i])
                    .collect();
                if open.is_empty() {
                    break;
                }
                // Batch for substep t+1 covers offsets [2^t - 1, 2^(t+1) - 2].
                let lo_off = (1usize << t) - 1;
                let hi_off = (1usize << (t + 1)) - 2;
                let mut work: Vec<(usize, Vec<Tentative>)> =
                    open.iter().map(|&i| (i, Vec::new())).collect();
                let sentinels: Vec<RowScan> = work
                    .par_iter_mut()
                    .with_min_len(ROW_GRAIN)
                    .map(|(i, out)| {
                        let i = *i;
                        let lo = fr[i] + lo_off;
                        let hi = m.min(fr[i] + hi_off);
                        let mut row_s = m + 1;
                        let mut col_s = Vec::new();
                        for j in lo..=hi {
                            let tv = view.tentative(i, j);
                            if let Some(s) = view.column_sentinel(i, j, tv.d) {
                                col_s.push((s, j));
                            }
                            if let Some(s) = view.row_sentinel(i, j, tv.d) {
                                row_s = row_s.min(s);
                            }
                            out.push(tv);
                        }
                        (i, row_s, col_s)
                    })
                    .collect();
                for (i, out) in work {
                    examined[i] += out.len();
                    bufs[i].extend(out);
                }
                for (i, row_s, col_s) in sentinels {
                    smin[i] = smin[i].min(row_s);
                    for (r, c) in col_s {
                        smin[r] = smin[r].min(c);
                    }
                }
                cordon = prefix_min(&smin);
                t += 1;
            }

            let mut finalized = 0;
            let mut total = 0;
            for i in 0..=n {
                let take = cordon[i].min(m + 1).saturating_sub(fr[i]);
                debug_assert!(take <= examined[i]);
                finalized += take;
                total += examined[i];
            }
            if finalized == 0 {
                return Err(DpError::Internal(
                    "no progress in a round; a cost does not satisfy its declared shape".into(),
                ));
            }
            d.par_chunks_mut(cols)
                .zip(best_p.par_chunks_mut(cols))
                .zip(best_q.par_chunks_mut(cols))
                .zip(bufs.par_iter())
                .enumerate()
                .for_each(|(i, (((drow, prow), qrow), buf))| {
                    let start = fr[i];
                    let take = cordon[i].min(m + 1).saturating_sub(start);
                    for (k, tv) in buf[..take].iter().enumerate() {
                        drow[start + k] = tv.d;
                        prow[start + k] = tv.bp;
                        qrow[start + k] = tv.bq;
                    }
                });

            let old_fr = stairs.frontier.clone();
            for (f, &c) in stairs.frontier.iter_mut().zip(&cordon) {
                *f = (*f).max(c.min(m + 1));
            }
            debug_assert!(stairs.is_monotone());
            let new_fc = stairs.column_frontier(m);
            self.update_columns(&d, &mut bcol, &fc, &new_fc)?;
            self.update_rows(&d, &mut brow, &old_fr, &stairs.frontier)?;
            fc = new_fc;
            stats.push_round(finalized, total - finalized, t0.elapsed());
        }

        Ok(GapSolution {
            n,
            m,
            d,
            best_p,
            best_q,
            stats,
        })
    }

    fn update_columns(
        &self,
        d: &[Cost],
        bcol: &mut [DecisionIntervals],
        old: &[usize],
        new: &[usize],
    ) -> Result<()> {
        let (n, cols) = (self.n, self.m + 1);
        let shape = self.w1.shape();
        bcol.par_iter_mut()
            .enumerate()
            .try_for_each(|(j, b)| -> Result<()> {
                let (lo, hi) = (old[j], new[j]);
                if hi == lo {
                    return Ok(());
                }
                if hi > n {
                    *b = DecisionIntervals::empty();
                    return Ok(());
                }
                let eval = |r: usize, s: usize| add(d[r * cols + j], self.w1.weight(r, s));
                let fresh = find_intervals(&eval, shape, lo, hi - 1, hi, n)?;
                *b = if b.is_empty() {
                    fresh
                } else {
                    b.trim_front(hi);
                    merge_decisions(&eval, shape, b, &fresh)?
                };
                Ok(())
            })
    }

    fn update_rows(
        &self,
        d: &[Cost],
        brow: &mut [DecisionIntervals],
        old: &[usize],
        new: &[usize],
    ) -> Result<()> {
        let (m, cols) = (self.m, self.m + 1);
        let shape = self.w2.shape();
        brow.par_iter_mut()
            .enumerate()
            .try_for_each(|(i, b)| -> Result<()> {
                let (lo, hi) = (old[i], new[i]);
                if hi == lo {
                    return Ok(());
                }
                if hi > m {
                    *b = DecisionIntervals::empty();
                    return Ok(());
                }
                let row = &d[i * cols..(i + 1) * cols];
                let eval = |c: usize, s: usize| add(row[c], self.w2.weight(c, s));
                let fresh = find_intervals(&eval, shape, lo, hi - 1, hi, m)?;
                *b = if b.is_empty() {
                    fresh
                } else {
                    b.trim_front(hi);
                    merge_decisions(&eval, shape, b, &fresh)?
                };
                Ok(())
            })
    }
}

fn prefix_min(v: &[usize]) -> Vec<usize> {
    let mut acc = usize::MAX;
    v.iter()
        .map(|&x| {
            acc = acc.min(x);
            acc
        })
        .collect()
}

/// Read-only state shared by all rows during one round.
struct View<'v> {
    s: &'v Solver<'v>,
    d: &'v [Cost],
    fr: &'v [usize],
    bcol: &'v [DecisionIntervals],
    brow: &'v [DecisionIntervals],
}

impl View<'_> {
    #[inline]
    fn at(&self, i: usize, j: usize) -> Cost {
        self.d[i * (self.s.m + 1) + j]
    }

    /// Best `P` from finalized rows of column `j`, for a non-final row `i`.
    #[inline]
    fn p_final(&self, i: usize, j: usize) -> (Cost, u32) {
        let b = &self.bcol[j];
        if b.is_empty() {
            return (INF, NONE);
        }
        let r = b.decision_at(i);
        (add(self.at(r, j), self.s.w1.weight(r, i)), r as u32)
    }

    #[inline]
    fn q_final(&self, i: usize, j: usize) -> (Cost, u32) {
        let b = &self.brow[i];
        if b.is_empty() {
            return (INF, NONE);
        }
        let c = b.decision_at(j);
        (add(self.at(i, c), self.s.w2.weight(c, j)), c as u32)
    }

    fn tentative(&self, i: usize, j: usize) -> Tentative {
        let (p, bp) = self.p_final(i, j);
        let (q, bq) = self.q_final(i, j);
        let mut v = p.min(q);
        if i > 0 && j > 0 && self.s.a[i - 1] == self.s.b[j - 1] && j - 1 < self.fr[i - 1] {
            v = v.min(self.at(i - 1, j - 1));
        }
        Tentative { d: v, bp, bq }
    }

    /// First row below `i` in column `j` that cell `(i, j)` would improve.
    fn column_sentinel(&self, i: usize, j: usize, v: Cost) -> Option<usize> {
        let n = self.s.n;
        if i >= n {
            return None;
        }
        let w1 = self.s.w1;
        let cand = |s: usize| add(v, w1.weight(i, s));
        let b = &self.bcol[j];
        if b.is_empty() || w1.shape() == Shape::Concave {
            return (cand(i + 1) < self.p_final(i + 1, j).0).then_some(i + 1);
        }
        first_relaxed(b, i + 1, cand, |r, s| add(self.at(r, j), w1.weight(r, s)))
    }

    fn row_sentinel(&self, i: usize, j: usize, v: Cost) -> Option<usize> {
        let m = self.s.m;
        if j >= m {
            return None;
        }
        let w2 = self.s.w2;
        let cand = |s: usize| add(v, w2.weight(j, s));
        let b = &self.brow[i];
        if b.is_empty() || w2.shape() == Shape::Concave {
            return (cand(j + 1) < self.q_final(i, j + 1).0).then_some(j + 1);
        }
        first_relaxed(b, j + 1, cand, |c, s| add(self.at(i, c), w2.weight(c, s)))
    }
}

/// Longest chain in the optimized GAP DAG, counting column-best, row-best
/// and matching diagonal edges; same-row and same-column steps are free.
pub fn gap_effective_depth<W1, W2>(inst: &GapInstance<W1, W2>, sol: &GapSolution) -> Result<usize> {
    let (n, m) = (sol.n, sol.m);
    if n != inst.a.len() || m != inst.b.len() {
        return Err(DpError::invalid(
            "solution does not belong to this instance",
        ));
    }
    let cols = m + 1;
    let mut ed = vec![0usize; (n + 1) * cols];
    for i in 0..=n {
        for j in 0..=m {
            if i == 0 && j == 0 {
                continue;
            }
            let mut e = 0;
            if i > 0 {
                let p = sol.best_p(i, j).ok_or_else(|| {
                    DpError::invalid(format!("cell ({i}, {j}) has no column decision"))
                })?;
                e = e.max(ed[(i - 1) * cols + j]).max(ed[p * cols + j] + 1);
            }
            if j > 0 {
                let q = sol.best_q(i, j).ok_or_else(|| {
                    DpError::invalid(format!("cell ({i}, {j}) has no row decision"))
                })?;
                e = e.max(ed[i * cols + j - 1]).max(ed[i * cols + q] + 1);
            }
            if i > 0 && j > 0 && inst.a[i - 1] == inst.b[j - 1] {
                e = e.max(ed[(i - 1) * cols + j - 1] + 1);
            }
            ed[i * cols + j] = e;
        }
    }
    Ok(ed[n * cols + m])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::{CostSpec, PostOfficeCost};
    use crate::glws::glws_seq;
    use crate::oracle::brute_gap;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cost(spec: &str, n: usize) -> PostOfficeCost {
        spec.parse::<CostSpec>().unwrap().build_unit(n).unwrap()
    }

    fn inst(a: &[u8], b: &[u8], s1: &str, s2: &str) -> GapInstance<PostOfficeCost, PostOfficeCost> {
        GapInstance::from_bytes(a, b, cost(s1, a.len()), cost(s2, b.len())).unwrap()
    }

    #[test]
    fn staircase_columns() {
        let s = Staircase {
            frontier: vec![4, 2, 2, 0],
        };
        assert_eq!(s.column_frontier(4), vec![3, 3, 1, 1, 0]);
        assert!(s.is_monotone());
        assert!(s.is_final(1, 1) && !s.is_final(1, 2));
    }

    #[test]
    fn single_column_is_glws() {
        let g = inst(b"abcdefg", b"", "quad:C=3", "quad:C=3");
        let sol = gap_solve(&g).unwrap();
        let one = glws_seq(&cost("quad:C=3", 7), 0);
        assert_eq!(sol.distance(), one.last());
        let depth = crate::types::effective_depth_glws(one.best()).unwrap();
        assert_eq!(gap_effective_depth(&g, &sol).unwrap(), depth);
        assert_eq!(sol.stats.rounds, depth);
    }

    #[test]
    fn identical_strings_cost_nothing() {
        let g = inst(b"abcdefgh", b"abcdefgh", "quad:C=2", "median:C=1");
        assert_eq!(gap_solve(&g).unwrap().distance(), 0);
    }

    #[test]
    fn empty_inputs() {
        let g = inst(b"", b"", "quad:C=2", "quad:C=2");
        let sol = gap_solve(&g).unwrap();
        assert_eq!(sol.distance(), 0);
        assert_eq!(sol.stats.rounds, 0);
        let g = inst(b"", b"xyz", "quad:C=2", "quad:C=5");
        assert_eq!(gap_solve(&g).unwrap().distance(), 14);
    }

    #[test]
    fn one_by_one_depth() {
        let g = inst(b"a", b"b", "quad:C=1", "quad:C=1");
        let sol = gap_solve(&g).unwrap();
        assert_eq!(sol.distance(), 4);
        assert_eq!(gap_effective_depth(&g, &sol).unwrap(), 2);
        assert_eq!(sol.stats.rounds, 2);
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!(
            GapInstance::from_bytes(b"ab", b"c", cost("quad:C=1", 3), cost("quad:C=1", 1)).is_err()
        );
    }

    fn random_case(rng: &mut ChaCha8Rng, max: usize) {
        let n = rng.gen_range(0..=max);
        let m = rng.gen_range(0..=max);
        let sigma = rng.gen_range(1..=4u8);
        let a: Vec<u8> = (0..n).map(|_| rng.gen_range(0..sigma)).collect();
        let b: Vec<u8> = (0..m).map(|_| rng.gen_range(0..sigma)).collect();
        let pick = |rng: &mut ChaCha8Rng| match rng.gen_range(0..3) {
            0 => format!("quad:C={}", rng.gen_range(0..20)),
            1 => format!("median:C={}", rng.gen_range(0..20)),
            _ => format!("sqrt:C={},K={}", rng.gen_range(0..20), rng.gen_range(1..64)),
        };
        let (s1, s2) = (pick(rng), pick(rng));
        let g = inst(&a, &b, &s1, &s2);
        let sol = gap_solve(&g).unwrap();
        let oracle = brute_gap(&g);
        assert_eq!(sol.table(), &oracle[..], "{s1} {s2} {a:?} {b:?}");
        let ed = gap_effective_depth(&g, &sol).unwrap();
        assert_eq!(sol.stats.rounds, ed, "{s1} {s2} {a:?} {b:?}");
        // Decisions are the smallest optimal ones.
        for i in 0..=n {
            for j in 0..=m {
                if i > 0 {
                    let best = (0..i)
                        .min_by_key(|&r| (add(oracle[r * (m + 1) + j], g.w1().weight(r, i)), r))
                        .unwrap();
                    assert_eq!(sol.best_p(i, j), Some(best));
                }
                if j > 0 {
                    let best = (0..j)
                        .min_by_key(|&c| (add(oracle[i * (m + 1) + c], g.w2().weight(c, j)), c))
                        .unwrap();
                    assert_eq!(sol.best_q(i, j), Some(best));
                }
            }
        }
    }

    #[test]
    fn matches_oracle_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for _ in 0..300 {
            random_case(&mut rng, 12);
        }
    }

    #[test]
    fn matches_oracle_medium() {
        let mut rng = ChaCha8Rng::seed_from_u64(72);
        for _ in 0..20 {
            random_case(&mut rng, 64);
        }
    }
}
