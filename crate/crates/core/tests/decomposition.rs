use otg_core::decomp::{
    analyze_class, blocks_witness_orderly, convex_closure, exhaustive_orderly, generator_pairs,
    is_k_orderly, minimal_orderly_k, orderly_cover, r_closure, sign_partition, verify_cover, Sign,
    ValueBlock,
};
use otg_core::seq::IncreasingTuple;
use proptest::prelude::*;
use proptest::sample::subsequence;

fn pair(max_len: usize, values: u64) -> impl Strategy<Value = (IncreasingTuple, IncreasingTuple)> {
    let pool: Vec<u64> = (0..values).collect();
    (1..=max_len)
        .prop_flat_map(move |len| {
            (
                subsequence(pool.clone(), len),
                subsequence(pool.clone(), len),
            )
        })
        .prop_filter("pair must differ", |(a, b)| a != b)
        .prop_map(|(a, b)| {
            (
                IncreasingTuple::new(a).unwrap(),
                IncreasingTuple::new(b).unwrap(),
            )
        })
}

/// Naive oracle: every nondecreasing map from the sorted distinct values to
/// block indices `0..=k`, checked against the orderly condition verbatim.
fn naive_orderly(x: &[u64], y: &[u64], k: usize, require_nonempty: bool) -> bool {
    let mut values: Vec<u64> = x.iter().chain(y).copied().collect();
    values.sort_unstable();
    values.dedup();
    let mut assign = vec![0usize; values.len()];
    loop {
        let block = |v: u64| assign[values.binary_search(&v).unwrap()];
        let shift_ok = x
            .iter()
            .zip(y)
            .all(|(&xi, &yi)| (0..k).all(|m| (block(xi) == m) == (block(yi) == m + 1)));
        let nonempty_ok = !require_nonempty || (0..=k).all(|m| assign.contains(&m));
        if shift_ok && nonempty_ok {
            return true;
        }
        // next nondecreasing sequence over 0..=k
        let Some(i) = (0..assign.len()).rev().find(|&i| assign[i] < k) else {
            return false;
        };
        let next = assign[i] + 1;
        for slot in &mut assign[i..] {
            *slot = next;
        }
    }
}

fn restrict(t: &IncreasingTuple, lo: usize, hi: usize) -> IncreasingTuple {
    t.slice(lo, hi)
}

#[test]
fn naive_oracle_matches_documented_examples() {
    assert!(naive_orderly(&[0, 1], &[1, 2], 2, false));
    assert!(!naive_orderly(&[0, 1], &[1, 2], 1, false));
    assert!(naive_orderly(&[0, 2], &[3, 5], 1, false));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn sign_partition_is_pointwise_comparison((a, b) in pair(8, 32)) {
        let p = sign_partition(&a, &b).unwrap();
        let mut all: Vec<usize> = p.zero.iter().chain(&p.plus).chain(&p.minus).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..a.len()).collect::<Vec<_>>());
        prop_assert!(p.zero.iter().all(|&i| a[i] == b[i]));
        prop_assert!(p.plus.iter().all(|&i| a[i] < b[i]));
        prop_assert!(p.minus.iter().all(|&i| b[i] < a[i]));
    }

    #[test]
    fn classes_are_sign_pure_and_zero_classes_singletons((a, b) in pair(8, 32)) {
        let classes = r_closure(&a, &b).unwrap();
        let mut next = 0;
        for c in &classes {
            prop_assert_eq!(c.lo, next);
            next = c.hi + 1;
            for i in c.lo..=c.hi {
                let sign = match a[i].cmp(&b[i]) {
                    std::cmp::Ordering::Equal => Sign::Zero,
                    std::cmp::Ordering::Less => Sign::Plus,
                    std::cmp::Ordering::Greater => Sign::Minus,
                };
                prop_assert_eq!(sign, c.sign);
            }
            if c.sign == Sign::Zero {
                prop_assert_eq!(c.lo, c.hi);
            }
        }
        prop_assert_eq!(next, a.len());
    }

    #[test]
    fn distinct_classes_have_separated_images((a, b) in pair(8, 32)) {
        let classes = r_closure(&a, &b).unwrap();
        for (i, c) in classes.iter().enumerate() {
            for d in &classes[i + 1..] {
                let max_a = (c.lo..=c.hi).map(|j| a[j]).max().unwrap();
                let max_b = (c.lo..=c.hi).map(|j| b[j]).max().unwrap();
                let min_a = (d.lo..=d.hi).map(|j| a[j]).min().unwrap();
                let min_b = (d.lo..=d.hi).map(|j| b[j]).min().unwrap();
                prop_assert!(max_a < min_b && max_b < min_a);
            }
        }
    }

    #[test]
    fn class_analysis_invariants((a, b) in pair(8, 32)) {
        for c in r_closure(&a, &b).unwrap().iter().filter(|c| c.sign != Sign::Zero) {
            let an = analyze_class(&a, &b, c).unwrap();
            let (x, y) = an.oriented(&a, &b);
            let class: Vec<usize> = (c.lo..=c.hi).collect();

            // delta chain: first index, then least index with y[delta_m] <= x[.]
            prop_assert_eq!(an.deltas[0], c.lo);
            for w in an.deltas.windows(2) {
                let least = class.iter().copied().find(|&i| y[w[0]] <= x[i]);
                prop_assert_eq!(least, Some(w[1]));
            }
            let last = *an.deltas.last().unwrap();
            prop_assert!(class.iter().all(|&i| x[i] < y[last]));
            prop_assert_eq!(an.n_a, an.deltas.len());

            // blocks partition the hull and shift x into y
            let lo = class.iter().map(|&i| x[i].min(y[i])).min().unwrap();
            let hi = class.iter().map(|&i| x[i].max(y[i])).max().unwrap();
            for v in lo..=hi {
                prop_assert_eq!(an.blocks.iter().filter(|blk| blk.contains(v)).count(), 1);
            }
            prop_assert!(an.blocks.iter().all(|blk| !blk.is_empty()));
            let block = |v: u64| an.blocks.iter().position(|blk| blk.contains(v)).unwrap();
            for &i in &class {
                for m in 0..an.n_a {
                    prop_assert_eq!(block(x[i]) == m, block(y[i]) == m + 1);
                }
            }

            // zeta sequence
            let z = &an.zetas;
            prop_assert_eq!(z.len(), an.n_a);
            prop_assert!(z.windows(2).all(|w| w[0] < w[1]));
            for m in 0..an.n_a {
                if m + 1 < an.n_a {
                    prop_assert!(x[z[m + 1]] <= y[z[m]]);
                }
                if m + 2 < an.n_a {
                    prop_assert!(y[z[m]] < x[z[m + 2]]);
                }
            }
        }
    }

    #[test]
    fn cover_is_valid_and_k_is_max_n_a((a, b) in pair(8, 32)) {
        let w = orderly_cover(&a, &b).unwrap();
        prop_assert!(verify_cover(&a, &b, &w));
        let max_n_a = r_closure(&a, &b)
            .unwrap()
            .iter()
            .filter(|c| c.sign != Sign::Zero)
            .map(|c| analyze_class(&a, &b, c).unwrap().n_a)
            .max()
            .unwrap_or(1);
        prop_assert_eq!(w.k, max_n_a);
    }

    #[test]
    fn closure_is_independent_of_processing_order(
        ((a, b), seed) in (pair(8, 32), any::<u64>())
    ) {
        let mut pairs = generator_pairs(&a, &b).unwrap();
        let reference = convex_closure(a.len(), &pairs);
        // deterministic Fisher-Yates driven by a simple LCG
        let mut state = seed;
        for i in (1..pairs.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            pairs.swap(i, (state >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(convex_closure(a.len(), &pairs), reference.clone());
        pairs.reverse();
        prop_assert_eq!(convex_closure(a.len(), &pairs), reference);
    }

    #[test]
    fn is_k_orderly_agrees_with_naive_oracle((a, b) in pair(6, 16), k in 1usize..=6) {
        let witness = is_k_orderly(&a, &b, k).unwrap();
        prop_assert_eq!(witness.is_some(), naive_orderly(a.values(), b.values(), k, false));
        if let Some(blocks) = witness {
            prop_assert_eq!(blocks.len(), k + 1);
            prop_assert!(blocks_witness_orderly(a.values(), b.values(), &blocks));
        }
    }

    #[test]
    fn restricted_class_is_exactly_n_a_orderly((a, b) in pair(6, 16)) {
        for c in r_closure(&a, &b).unwrap().iter().filter(|c| c.sign != Sign::Zero) {
            let an = analyze_class(&a, &b, c).unwrap();
            let (x, y) = an.oriented(&a, &b);
            let (x, y) = (restrict(x, c.lo, c.hi), restrict(y, c.lo, c.hi));
            prop_assert_eq!(minimal_orderly_k(&x, &y, 8, 24).unwrap(), Some(an.n_a));
            prop_assert!(blocks_witness_orderly(x.values(), y.values(), &an.blocks));
        }
    }
}

#[test]
fn verify_cover_rejects_forged_blocks() {
    let a = IncreasingTuple::new(vec![0, 2, 4]).unwrap();
    let b = IncreasingTuple::new(vec![1, 3, 5]).unwrap();
    let mut w = orderly_cover(&a, &b).unwrap();
    w.pieces[1].blocks = vec![ValueBlock::half_open(2, 2), ValueBlock::closed(2, 3)];
    assert!(!verify_cover(&a, &b, &w));
}

#[test]
fn exhaustive_search_respects_cap() {
    let a = IncreasingTuple::new((0..13).map(|i| 2 * i).collect()).unwrap();
    let b = IncreasingTuple::new((0..13).map(|i| 2 * i + 1).collect()).unwrap();
    assert!(exhaustive_orderly(&a, &b, 1, 24).is_err());
    assert!(exhaustive_orderly(&a, &b, 1, 26).is_ok());
}
