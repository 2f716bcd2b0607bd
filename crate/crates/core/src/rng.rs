//! Seeded randomness for reproducible experiments.
//!
//! The generator is SplitMix64 with its state initialised to the seed, so
//! any implementation of the published algorithm reproduces the same
//! stream. Bounded draws use rejection sampling on the full 64-bit output.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, Result};
use crate::graph::FiniteGraph;
use crate::seq::IncreasingTuple;

#[derive(Debug, Clone)]
pub struct SeededRng {
    inner: SplitMix64,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            inner: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform draw from `0..bound`. Outputs below `2^64 mod bound` are
    /// rejected so every residue is equally likely.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % bound;
            }
        }
    }

    /// Uniform draw from `lo..=hi`.
    pub fn between(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }

    /// True with probability `num / den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Draws a random pair of distinct increasing tuples of equal length.
///
/// A length `l` in `1..=max_len` is drawn, then `2l` values with replacement
/// from `0..value_cap`; the sorted values are dealt alternately to `a` and
/// `b`. Draws that are not strictly increasing, or give `a = b`, are retried
/// from the start.
pub fn random_pair(
    rng: &mut SeededRng,
    max_len: usize,
    value_cap: u64,
) -> Result<(IncreasingTuple, IncreasingTuple)> {
    if max_len == 0 || value_cap < 2 {
        return Err(Error::InvalidInput(format!(
            "random pairs need max_len >= 1 and value_cap >= 2 (got {max_len}, {value_cap})"
        )));
    }
    loop {
        let len = rng.between(1, max_len as u64) as usize;
        let mut values: Vec<u64> = (0..2 * len).map(|_| rng.below(value_cap)).collect();
        values.sort_unstable();
        let a: Vec<u64> = values.iter().step_by(2).copied().collect();
        let b: Vec<u64> = values.iter().skip(1).step_by(2).copied().collect();
        if a == b {
            continue;
        }
        if let (Ok(a), Ok(b)) = (IncreasingTuple::new(a), IncreasingTuple::new(b)) {
            return Ok((a, b));
        }
    }
}

/// `G(n, num/den)`: each of the `n(n-1)/2` pairs is an edge independently.
pub fn random_graph(rng: &mut SeededRng, n: usize, num: u64, den: u64) -> FiniteGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(num, den) {
                edges.push((u, v));
            }
        }
    }
    FiniteGraph::unlabeled(n, &edges).expect("edges are in range and loop-free")
}
