//! Batch property checks over seeded random pairs.
//!
//! A master generator draws one seed per case, so case `i` sees the same
//! pair no matter how many worker threads run or in which order cases
//! finish. Results are aggregated in case order.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::decomp::{
    analyze_class, convex_closure, generator_pairs, is_k_orderly, orderly_cover, r_closure,
    sign_partition, verify_cover, ClassAnalysis, Sign,
};
use crate::embedder::{build_g_sequence, cover_embedding, verify_embedding};
use crate::error::{Error, Result};
use crate::rng::{random_pair, SeededRng};
use crate::seq::{otp, remap_monotone, IncreasingTuple};

/// Invariant names, in report order.
pub const INVARIANTS: [&str; 11] = [
    "sign_partition",
    "class_sign_purity",
    "class_separation",
    "gamma_search",
    "block_shift",
    "zeta_inequalities",
    "closure_confluence",
    "orderly_oracle",
    "cover_verifies",
    "embedding",
    "otp_remap_invariance",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    pub max_len: usize,
    pub value_cap: u64,
    /// Embeddings are checked for every `N` in `3..=max_n`.
    pub max_n: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            count: 100,
            max_len: 6,
            value_cap: 16,
            max_n: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub invariant: String,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: usize,
    pub invariant: String,
    pub a: IncreasingTuple,
    pub b: IncreasingTuple,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub tallies: Vec<Tally>,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Fixed-width table followed by one JSON line per failure.
    pub fn to_table(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "suite seed={} count={} max_len={} value_cap={} max_n={}\n",
            c.seed, c.count, c.max_len, c.value_cap, c.max_n
        );
        if c.count == 0 {
            return out;
        }
        out.push_str(&format!(
            "{:<24}{:>8}{:>8}\n",
            "invariant", "passed", "failed"
        ));
        for t in &self.tallies {
            out.push_str(&format!(
                "{:<24}{:>8}{:>8}\n",
                t.invariant, t.passed, t.failed
            ));
        }
        for f in &self.failures {
            out.push_str("failure ");
            out.push_str(&serde_json::to_string(f).expect("failure serializes"));
            out.push('\n');
        }
        out
    }
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_sign_partition(a: &IncreasingTuple, b: &IncreasingTuple) -> Check {
    let p = sign_partition(a, b).map_err(|e| e.to_string())?;
    let mut all: Vec<usize> = p
        .zero
        .iter()
        .chain(&p.plus)
        .chain(&p.minus)
        .copied()
        .collect();
    all.sort_unstable();
    ensure(all == (0..a.len()).collect::<Vec<_>>(), || {
        "sets do not partition the indices".into()
    })?;
    ensure(
        p.zero.iter().all(|&i| a[i] == b[i])
            && p.plus.iter().all(|&i| a[i] < b[i])
            && p.minus.iter().all(|&i| b[i] < a[i]),
        || "index placed in the wrong set".into(),
    )
}

fn check_sign_purity(a: &IncreasingTuple, b: &IncreasingTuple) -> Check {
    for c in r_closure(a, b).map_err(|e| e.to_string())? {
        for i in c.lo..=c.hi {
            let s = match a[i].cmp(&b[i]) {
                std::cmp::Ordering::Equal => Sign::Zero,
                std::cmp::Ordering::Less => Sign::Plus,
                std::cmp::Ordering::Greater => Sign::Minus,
            };
            ensure(s == c.sign, || {
                format!("class [{}, {}] mixes signs at {i}", c.lo, c.hi)
            })?;
        }
        ensure(c.sign != Sign::Zero || c.lo == c.hi, || {
            format!("zero class [{}, {}] is not a singleton", c.lo, c.hi)
        })?;
    }
    Ok(())
}

fn check_separation(a: &IncreasingTuple, b: &IncreasingTuple) -> Check {
    let classes = r_closure(a, b).map_err(|e| e.to_string())?;
    for (i, c) in classes.iter().enumerate() {
        for d in &classes[i + 1..] {
            ensure(a[c.hi] < b[d.lo] && b[c.hi] < a[d.lo], || {
                format!(
                    "classes [{}, {}] and [{}, {}] overlap",
                    c.lo, c.hi, d.lo, d.hi
                )
            })?;
        }
    }
    Ok(())
}

fn analyses(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
) -> std::result::Result<Vec<ClassAnalysis>, String> {
    r_closure(a, b)
        .map_err(|e| e.to_string())?
        .iter()
        .filter(|c| c.sign != Sign::Zero)
        .map(|c| analyze_class(a, b, c).map_err(|e| e.to_string()))
        .collect()
}

fn check_block_shift(a: &IncreasingTuple, b: &IncreasingTuple, all: &[ClassAnalysis]) -> Check {
    for an in all {
        let (x, y) = an.oriented(a, b);
        let block = |v: u64| an.blocks.iter().position(|c| c.contains(v));
        for i in an.class.lo..=an.class.hi {
            let (bx, by) = (block(x[i]), block(y[i]));
            for m in 0..an.n_a {
                ensure((bx == Some(m)) == (by == Some(m + 1)), || {
                    format!("index {i} breaks the shift at block {m}")
                })?;
            }
        }
    }
    Ok(())
}

fn check_zetas(a: &IncreasingTuple, b: &IncreasingTuple, all: &[ClassAnalysis]) -> Check {
    for an in all {
        let (x, y) = an.oriented(a, b);
        let z = &an.zetas;
        ensure(
            z.len() == an.n_a && z.windows(2).all(|w| w[0] < w[1]),
            || format!("zetas {z:?} not increasing of length {}", an.n_a),
        )?;
        for m in 0..an.n_a {
            if m + 1 < an.n_a {
                ensure(x[z[m + 1]] <= y[z[m]], || {
                    format!("a[zeta_{}] > b[zeta_{m}]", m + 1)
                })?;
            }
            if m + 2 < an.n_a {
                ensure(y[z[m]] < x[z[m + 2]], || {
                    format!("b[zeta_{m}] >= a[zeta_{}]", m + 2)
                })?;
            }
        }
    }
    Ok(())
}

fn check_confluence(a: &IncreasingTuple, b: &IncreasingTuple) -> Check {
    let mut pairs = generator_pairs(a, b).map_err(|e| e.to_string())?;
    let forward = convex_closure(a.len(), &pairs);
    pairs.reverse();
    ensure(convex_closure(a.len(), &pairs) == forward, || {
        "closure depends on order".into()
    })
}

fn check_orderly_oracle(a: &IncreasingTuple, b: &IncreasingTuple, all: &[ClassAnalysis]) -> Check {
    for an in all {
        let (x, y) = an.oriented(a, b);
        let (x, y) = (
            x.slice(an.class.lo, an.class.hi),
            y.slice(an.class.lo, an.class.hi),
        );
        for k in 1..=an.n_a {
            match is_k_orderly(&x, &y, k) {
                Ok(w) => ensure(w.is_some() == (k == an.n_a), || {
                    format!(
                        "class [{}, {}]: {k}-orderly is {}",
                        an.class.lo,
                        an.class.hi,
                        w.is_some()
                    )
                })?,
                Err(Error::SearchCapExceeded { .. }) => {}
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(())
}

fn check_cover(a: &IncreasingTuple, b: &IncreasingTuple, all: &[ClassAnalysis]) -> Check {
    let w = orderly_cover(a, b).map_err(|e| e.to_string())?;
    ensure(verify_cover(a, b, &w), || "cover does not verify".into())?;
    let max_n_a = all.iter().map(|an| an.n_a).max().unwrap_or(1);
    ensure(w.k == max_n_a, || {
        format!("cover k = {} but max n_A = {max_n_a}", w.k)
    })
}

fn check_embedding(
    a: &IncreasingTuple,
    b: &IncreasingTuple,
    all: &[ClassAnalysis],
    max_n: usize,
) -> Check {
    for an in all {
        let (x, y) = an.oriented(a, b);
        let (x, y) = (
            x.slice(an.class.lo, an.class.hi),
            y.slice(an.class.lo, an.class.hi),
        );
        build_g_sequence(&x, &y, an.n_a, &an.blocks).map_err(|e| e.to_string())?;
    }
    let w = orderly_cover(a, b).map_err(|e| e.to_string())?;
    let pattern = otp(a, b).map_err(|e| e.to_string())?;
    for n in 3..=max_n {
        let e = cover_embedding(a, b, &w, n).map_err(|e| format!("N={n}: {e}"))?;
        ensure(verify_embedding(&e, &pattern), || {
            format!("N={n}: re-verification failed")
        })?;
    }
    Ok(())
}

fn check_remap(a: &IncreasingTuple, b: &IncreasingTuple) -> Check {
    let f = |x: u64| 3 * x + 7;
    let (fa, fb) = (
        remap_monotone(a, f).map_err(|e| e.to_string())?,
        remap_monotone(b, f).map_err(|e| e.to_string())?,
    );
    ensure(otp(a, b).ok() == otp(&fa, &fb).ok(), || {
        "otp changed under x -> 3x+7".into()
    })
}

/// Runs every invariant on one pair, in [`INVARIANTS`] order.
pub fn check_pair(a: &IncreasingTuple, b: &IncreasingTuple, max_n: usize) -> Vec<Check> {
    let analysed = analyses(a, b);
    let with = |f: &dyn Fn(&[ClassAnalysis]) -> Check| match &analysed {
        Ok(all) => f(all),
        Err(e) => Err(format!("class analysis failed: {e}")),
    };
    vec![
        check_sign_partition(a, b),
        check_sign_purity(a, b),
        check_separation(a, b),
        analysed.as_ref().map(|_| ()).map_err(Clone::clone),
        with(&|all| check_block_shift(a, b, all)),
        with(&|all| check_zetas(a, b, all)),
        check_confluence(a, b),
        with(&|all| check_orderly_oracle(a, b, all)),
        with(&|all| check_cover(a, b, all)),
        with(&|all| check_embedding(a, b, all, max_n)),
        check_remap(a, b),
    ]
}

/// Runs the suite on `threads` workers; the report does not depend on
/// `threads`.
pub fn run_suite(config: &SuiteConfig, threads: usize) -> Result<SuiteReport> {
    if config.max_len > 16 || config.value_cap > 1 << 20 || config.max_n > 8 {
        return Err(Error::InvalidInput(
            "suite caps: max_len <= 16, value_cap <= 2^20, max_n <= 8".into(),
        ));
    }
    let mut master = SeededRng::new(config.seed);
    let seeds: Vec<u64> = (0..config.count).map(|_| master.next_u64()).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    let results: Vec<Result<(IncreasingTuple, IncreasingTuple, Vec<Check>)>> = pool.install(|| {
        seeds
            .par_iter()
            .map(|&seed| {
                let mut rng = SeededRng::new(seed);
                let (a, b) = random_pair(&mut rng, config.max_len, config.value_cap)?;
                let checks = check_pair(&a, &b, config.max_n);
                Ok((a, b, checks))
            })
            .collect()
    });

    let mut tallies: Vec<Tally> = INVARIANTS
        .iter()
        .map(|name| Tally {
            invariant: (*name).to_string(),
            passed: 0,
            failed: 0,
        })
        .collect();
    let mut failures = Vec::new();
    for (case, result) in results.into_iter().enumerate() {
        let (a, b, checks) = result?;
        for (tally, check) in tallies.iter_mut().zip(checks) {
            match check {
                Ok(()) => tally.passed += 1,
                Err(detail) => {
                    tally.failed += 1;
                    failures.push(Failure {
                        case,
                        invariant: tally.invariant.clone(),
                        a: a.clone(),
                        b: b.clone(),
                        detail,
                    });
                }
            }
        }
    }
    Ok(SuiteReport {
        config: *config,
        tallies,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes_and_is_thread_independent() {
        let config = SuiteConfig {
            seed: 7,
            count: 40,
            ..SuiteConfig::default()
        };
        let one = run_suite(&config, 1).unwrap();
        let four = run_suite(&config, 4).unwrap();
        assert!(one.all_passed(), "{}", one.to_table());
        assert_eq!(one.to_table(), four.to_table());
        assert!(one.tallies.iter().all(|t| t.passed == 40));
    }

    #[test]
    fn empty_suite_has_header_only() {
        let config = SuiteConfig {
            count: 0,
            ..SuiteConfig::default()
        };
        let report = run_suite(&config, 2).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.to_table().lines().count(), 1);
    }

    #[test]
    fn caps_are_enforced() {
        let config = SuiteConfig {
            max_len: 17,
            ..SuiteConfig::default()
        };
        assert!(run_suite(&config, 1).is_err());
    }
}
