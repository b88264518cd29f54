//! Seeded instance generators. Every random choice comes from one
//! `ChaCha8Rng` seeded with the caller's seed.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{DpError, Result};
use crate::extras::ObstWeights;
use crate::types::Cost;

/// Point layouts for GLWS instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distribution {
    /// Gaps drawn uniformly from `1..=2 * spread - 1`.
    Uniform,
    /// Mostly unit gaps with a rare long jump, giving natural clusters.
    Clustered,
}

impl FromStr for Distribution {
    type Err = DpError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(Distribution::Uniform),
            "clustered" => Ok(Distribution::Clustered),
            other => Err(DpError::invalid(format!(
                "unknown distribution '{other}' (expected uniform or clustered)"
            ))),
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Distribution::Uniform => "uniform",
            Distribution::Clustered => "clustered",
        })
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` strictly increasing integer positions starting near zero.
pub fn glws_positions(n: usize, dist: Distribution, spread: u32, seed: u64) -> Vec<i64> {
    let mut r = rng(seed);
    let spread = spread.max(1) as i64;
    let mut x = 0i64;
    (0..n)
        .map(|_| {
            x += match dist {
                Distribution::Uniform => r.gen_range(1..=2 * spread - 1),
                Distribution::Clustered if r.gen_ratio(1, 64) => 64 * spread,
                Distribution::Clustered => r.gen_range(1..=spread / 4 + 1),
            };
            x
        })
        .collect()
}

/// Two uniform random strings over the first `alphabet` letters.
pub fn sequences(n: usize, m: usize, alphabet: u16, seed: u64) -> Result<(Vec<u8>, Vec<u8>)> {
    if !(1..=256).contains(&alphabet) {
        return Err(DpError::invalid(format!(
            "alphabet size {alphabet} is outside 1..=256"
        )));
    }
    let mut r = rng(seed);
    let mut draw = |len: usize| -> Vec<u8> {
        (0..len)
            .map(|_| {
                let s = r.gen_range(0..alphabet);
                if alphabet <= 26 {
                    b'a' + s as u8
                } else {
                    s as u8
                }
            })
            .collect()
    };
    let a = draw(n);
    let b = draw(m);
    Ok((a, b))
}

/// Uniform random permutation of `0..n`.
pub fn permutation(n: usize, seed: u64) -> Vec<u32> {
    let mut v: Vec<u32> = (0..n as u32).collect();
    v.shuffle(&mut rng(seed));
    v
}

/// Random OBST weights in `0..100`, either per key or interleaved with gaps.
pub fn obst_weights(n: usize, gaps: bool, seed: u64) -> ObstWeights {
    let mut r = rng(seed);
    let len = if gaps { 2 * n + 1 } else { n };
    let v: Vec<Cost> = (0..len).map(|_| r.gen_range(0..100)).collect();
    if gaps {
        ObstWeights::Gaps(v)
    } else {
        ObstWeights::Keys(v)
    }
}
