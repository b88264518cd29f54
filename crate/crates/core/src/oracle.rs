//! Deliberately naive reference implementations.
//!
//! Nothing here reuses the optimized modules beyond the shared value types
//! and cost evaluation, so agreement between the two is meaningful.

use std::collections::HashMap;

use crate::cost::CostModel;
use crate::error::{DpError, Result};
use crate::extras::ObstWeights;
use crate::gap::GapInstance;
use crate::glws::GlwsSolution;
use crate::types::{add, Cost, INF};

/// Literal `O(n^2)` evaluation of the GLWS recurrence, smallest `j` on ties.
#[allow(clippy::needless_range_loop)]
pub fn brute_glws<M: CostModel + ?Sized>(model: &M, d0: Cost) -> GlwsSolution {
    let n = model.len();
    let mut d = vec![d0; n + 1];
    let mut best = vec![0; n + 1];
    for i in 1..=n {
        let mut v = add(model.transform(d[0], 0), model.weight(0, i));
        let mut b = 0;
        for j in 1..i {
            let c = add(model.transform(d[j], j), model.weight(j, i));
            if c < v {
                v = c;
                b = j;
            }
        }
        d[i] = v;
        best[i] = b;
    }
    GlwsSolution::from_parts(d, best, None).expect("arrays have matching lengths")
}

/// Classic `O(nm)` longest common subsequence length.
pub fn brute_lcs<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x == y {
                prev[j] + 1
            } else {
                prev[j + 1].max(cur[j])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// `O(n^2)` longest strictly increasing subsequence; `dp[i]` is the length of
/// the longest one ending at `a[i]`.
pub fn brute_lis<T: Ord>(a: &[T]) -> (usize, Vec<usize>) {
    let mut dp = vec![1usize; a.len()];
    for i in 0..a.len() {
        for j in 0..i {
            if a[j] < a[i] && dp[j] + 1 > dp[i] {
                dp[i] = dp[j] + 1;
            }
        }
    }
    (dp.iter().copied().max().unwrap_or(0), dp)
}

/// Patience sorting, `O(n log n)`: length of the longest strictly
/// increasing subsequence.
pub fn patience_lis<T: Ord>(a: &[T]) -> usize {
    let mut tops: Vec<&T> = Vec::new();
    for x in a {
        let p = tops.partition_point(|t| *t < x);
        if p == tops.len() {
            tops.push(x);
        } else {
            tops[p] = x;
        }
    }
    tops.len()
}

/// Triple loop over the GAP recurrence; row-major `(n + 1) x (m + 1)` table.
pub fn brute_gap<W1: CostModel, W2: CostModel>(inst: &GapInstance<W1, W2>) -> Vec<Cost> {
    let (a, b) = (inst.a(), inst.b());
    let (n, m) = (a.len(), b.len());
    let cols = m + 1;
    let mut d = vec![INF; (n + 1) * cols];
    for i in 0..=n {
        for j in 0..=m {
            if i == 0 && j == 0 {
                d[0] = 0;
                continue;
            }
            let mut v = INF;
            for r in 0..i {
                v = v.min(add(d[r * cols + j], inst.w1().weight(r, i)));
            }
            for c in 0..j {
                v = v.min(add(d[i * cols + c], inst.w2().weight(c, j)));
            }
            if i > 0 && j > 0 && a[i - 1] == b[j - 1] {
                v = v.min(d[(i - 1) * cols + j - 1]);
            }
            d[i * cols + j] = v;
        }
    }
    d
}

/// Top-down memoized evaluation of `D[n][m]`, for cross-checking
/// [`brute_gap`] on small inputs.
pub fn brute_gap_memo<W1: CostModel, W2: CostModel>(inst: &GapInstance<W1, W2>) -> Cost {
    fn go<W1: CostModel, W2: CostModel>(
        inst: &GapInstance<W1, W2>,
        memo: &mut HashMap<(usize, usize), Cost>,
        i: usize,
        j: usize,
    ) -> Cost {
        if i == 0 && j == 0 {
            return 0;
        }
        if let Some(&v) = memo.get(&(i, j)) {
            return v;
        }
        let mut v = INF;
        if i > 0 && j > 0 && inst.a()[i - 1] == inst.b()[j - 1] {
            v = go(inst, memo, i - 1, j - 1);
        }
        for r in (0..i).rev() {
            v = v.min(add(go(inst, memo, r, j), inst.w1().weight(r, i)));
        }
        for c in (0..j).rev() {
            v = v.min(add(go(inst, memo, i, c), inst.w2().weight(c, j)));
        }
        memo.insert((i, j), v);
        v
    }
    go(inst, &mut HashMap::new(), inst.a().len(), inst.b().len())
}

/// `O(k n^2)` exactly-`k`-segment GLWS; [`INF`] when `k > n`.
pub fn brute_kglws<M: CostModel + ?Sized>(model: &M, k: usize) -> Cost {
    let n = model.len();
    let mut prev = vec![INF; n + 1];
    prev[0] = 0;
    for _ in 0..k {
        let mut cur = vec![INF; n + 1];
        for (i, slot) in cur.iter_mut().enumerate().skip(1) {
            for (j, &p) in prev.iter().enumerate().take(i) {
                *slot = (*slot).min(add(p, model.weight(j, i)));
            }
        }
        prev = cur;
    }
    prev[n]
}

/// Unrestricted `O(n^3)` optimal binary search tree cost.
pub fn brute_obst(weights: &ObstWeights) -> Result<Cost> {
    let (raw, gaps) = match weights {
        ObstWeights::Keys(v) => (v, false),
        ObstWeights::Gaps(v) => (v, true),
    };
    if gaps && raw.len() % 2 == 0 {
        return Err(DpError::invalid("gap weights need odd length"));
    }
    let n = if gaps { raw.len() / 2 } else { raw.len() };
    let span = |i: usize, j: usize| -> Cost {
        if gaps {
            raw[2 * (i - 1)..=2 * j].iter().sum()
        } else {
            raw[i - 1..j].iter().sum()
        }
    };
    // d[i][j] for keys i..=j, with d[i][i-1] = 0.
    let mut d = vec![vec![0 as Cost; n + 1]; n + 2];
    for len in 1..=n {
        for i in 1..=n + 1 - len {
            let j = i + len - 1;
            let best = (i..=j)
                .map(|r| d[i][r - 1] + d[r + 1][j])
                .min()
                .expect("non-empty span");
            d[i][j] = best + span(i, j);
        }
    }
    Ok(if n == 0 { 0 } else { d[1][n] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::{FnCost, Shape};

    #[test]
    fn glws_examples() {
        let m = FnCost::new(6, Shape::Convex, |j: usize, i: usize| {
            ((i - j) * (i - j)) as Cost + 10
        });
        let s = brute_glws(&m, 0);
        assert_eq!(s.values(), &[11, 14, 19, 26, 33, 38]);
        assert_eq!(s.best(), &[0, 0, 0, 0, 2, 3]);
        let m = FnCost::new(0, Shape::Convex, |_, _| 1);
        assert!(brute_glws(&m, 0).values().is_empty());
        let m = FnCost::new(9, Shape::Convex, |j: usize, i: usize| (i - j) as Cost);
        let s = brute_glws(&m, 0);
        assert!(s
            .values()
            .iter()
            .enumerate()
            .all(|(k, &v)| v == k as Cost + 1));
        assert!(s.best().iter().all(|&b| b == 0));
    }

    #[test]
    fn gap_oracles_agree() {
        use crate::cost::CostSpec;
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for t in 0..40 {
            let (n, m) = (rng.gen_range(0..=16), rng.gen_range(0..=16));
            let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..3)).collect();
            let b: Vec<u32> = (0..m).map(|_| rng.gen_range(0..3)).collect();
            let spec: CostSpec = if t % 2 == 0 {
                "quad:C=3"
            } else {
                "sqrt:C=1,K=40"
            }
            .parse()
            .unwrap();
            let inst = GapInstance::new(
                a,
                b,
                spec.build_unit(n).unwrap(),
                spec.build_unit(m).unwrap(),
            )
            .unwrap();
            assert_eq!(brute_gap(&inst)[n * (m + 1) + m], brute_gap_memo(&inst));
        }
        let s: CostSpec = "quad:C=1".parse().unwrap();
        let same = GapInstance::new(
            vec![1, 2, 3],
            vec![1, 2, 3],
            s.build_unit(3).unwrap(),
            s.build_unit(3).unwrap(),
        )
        .unwrap();
        assert_eq!(brute_gap_memo(&same), 0);
        let col = GapInstance::new(
            vec![1, 2, 3, 4],
            vec![],
            s.build_unit(4).unwrap(),
            s.build_unit(0).unwrap(),
        )
        .unwrap();
        let one = brute_glws(&s.build_unit(4).unwrap(), 0);
        assert_eq!(brute_gap(&col)[4], one.last());
    }

    #[test]
    fn kglws_and_obst_examples() {
        let sq = FnCost::new(4, Shape::Convex, |j: usize, i: usize| {
            ((i - j) * (i - j)) as Cost
        });
        assert_eq!(brute_kglws(&sq, 2), 8);
        assert_eq!(brute_kglws(&sq, 1), 16);
        assert_eq!(brute_kglws(&sq, 4), 4);
        assert_eq!(brute_kglws(&sq, 5), INF);
        assert_eq!(brute_obst(&ObstWeights::Keys(vec![7])).unwrap(), 7);
        assert_eq!(brute_obst(&ObstWeights::Keys(vec![1, 2, 3])).unwrap(), 10);
        assert_eq!(brute_obst(&ObstWeights::Gaps(vec![1, 5, 2])).unwrap(), 8);
    }

    #[test]
    fn lcs_examples() {
        assert_eq!(brute_lcs(b"abcb", b"bca"), 2);
        assert_eq!(brute_lcs(b"hello", b"hello"), 5);
        assert_eq!(brute_lcs(b"abc", b"xyz"), 0);
        assert_eq!(brute_lcs::<u8>(b"", b"abc"), 0);
    }

    #[test]
    fn lis_examples() {
        assert_eq!(brute_lis(&[1, 2, 3, 4]).0, 4);
        assert_eq!(brute_lis(&[4, 3, 2, 1]).0, 1);
        let (k, dp) = brute_lis(&[5, 3, 4, 1, 2]);
        assert_eq!(k, 2);
        assert_eq!(dp, vec![1, 1, 2, 1, 2]);
        assert_eq!(brute_lis::<i32>(&[]).0, 0);
        assert_eq!(patience_lis(&[5, 3, 4, 1, 2]), 2);
        assert_eq!(patience_lis(&[1, 1, 1]), 1);
        assert_eq!(patience_lis(&[1, 2, 3]), 3);
    }
}
