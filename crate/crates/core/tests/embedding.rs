use std::collections::BTreeSet;

use otg_core::chroma::{chromatic_number, pullback_coloring, verify_coloring, DEFAULT_BUDGET};
use otg_core::decomp::{analyze_class, orderly_cover, r_closure, Sign};
use otg_core::embedder::{build_g_sequence, cover_embedding, verify_embedding, EmbeddingMap};
use otg_core::graph::{order_type_graph, shift_graph, verify_homomorphism, VertexMap};
use otg_core::seq::{otp, remap_monotone, Caps, IncreasingTuple};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn t(v: &[u64]) -> IncreasingTuple {
    IncreasingTuple::new(v.to_vec()).unwrap()
}

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

/// Replaces every image value by its rank among all image values.
fn compress(e: &EmbeddingMap) -> (Vec<IncreasingTuple>, usize) {
    let all: BTreeSet<u64> = e
        .map
        .iter()
        .flat_map(|m| m.image.values().to_vec())
        .collect();
    let rank: Vec<u64> = all.iter().copied().collect();
    let images = e
        .map
        .iter()
        .map(|m| remap_monotone(&m.image, |x| rank.binary_search(&x).unwrap() as u64).unwrap())
        .collect();
    (images, all.len())
}

#[test]
fn pullback_through_the_embedding_bounds_shift_chromatic_numbers() {
    for (a, b, n) in [
        (t(&[0, 1]), t(&[1, 2]), 5),
        (t(&[0, 2]), t(&[3, 5]), 4),
        (t(&[1, 4]), t(&[0, 2]), 5),
        (t(&[0, 5]), t(&[0, 6]), 4),
    ] {
        let w = orderly_cover(&a, &b).unwrap();
        let e = cover_embedding(&a, &b, &w, n).unwrap();
        let (images, theta) = compress(&e);
        let p = otp(&a, &b).unwrap();
        let target = order_type_graph(&p, theta).unwrap();
        let source = shift_graph(w.k, n).unwrap();
        let f = VertexMap(images.iter().map(|x| target.position(x).unwrap()).collect());
        assert!(f.is_injective());
        assert!(verify_homomorphism(&f, &source, &target).unwrap());
        let chi_target = chromatic_number(&target, DEFAULT_BUDGET).unwrap();
        let witness = match chi_target {
            otg_core::chroma::ChiOutcome::Exact { witness, .. } => witness,
            other => panic!("inconclusive: {other:?}"),
        };
        let pulled = pullback_coloring(&f, &source, &target, &witness).unwrap();
        assert!(verify_coloring(&source, &pulled));
        let chi_source = chromatic_number(&source, DEFAULT_BUDGET)
            .unwrap()
            .exact()
            .unwrap();
        assert!(chi_source <= witness.palette, "{a} {b}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cover_embedding_verifies((a, b) in pair(5, 12), n in 3usize..=5) {
        let w = orderly_cover(&a, &b).unwrap();
        let e = cover_embedding(&a, &b, &w, n).unwrap();
        let p = otp(&a, &b).unwrap();
        prop_assert!(verify_embedding(&e, &p));
        let arcs = if n >= w.k { otg_core::graph::lshift_digraph(w.k, n).unwrap().arcs() } else { vec![] };
        for (u, v) in arcs {
            // directed: the pattern holds from eta to rho, and images differ
            prop_assert_eq!(otp(&e.map[u].image, &e.map[v].image).unwrap(), p.clone());
            prop_assert_ne!(&e.map[u].image, &e.map[v].image);
        }
    }

    #[test]
    fn monotone_remap_preserves_the_embedding((a, b) in pair(4, 10), n in 3usize..=4) {
        let w = orderly_cover(&a, &b).unwrap();
        let e = cover_embedding(&a, &b, &w, n).unwrap();
        let p = otp(&a, &b).unwrap();
        let arcs = if n >= w.k { otg_core::graph::lshift_digraph(w.k, n).unwrap().arcs() } else { vec![] };
        let f = |x: u64| 5 * x + 3;
        for (u, v) in arcs {
            let (x, y) = (&e.map[u].image, &e.map[v].image);
            let fx = IncreasingTuple::with_caps(x.values().iter().map(|&v| f(v)).collect(), Caps::WIDE).unwrap();
            let fy = IncreasingTuple::with_caps(y.values().iter().map(|&v| f(v)).collect(), Caps::WIDE).unwrap();
            prop_assert_eq!(otp(&fx, &fy).unwrap(), p.clone());
        }
    }

    #[test]
    fn g_sequences_satisfy_the_dagger_condition((a, b) in pair(6, 14)) {
        for c in r_closure(&a, &b).unwrap().iter().filter(|c| c.sign != Sign::Zero) {
            let an = analyze_class(&a, &b, c).unwrap();
            let (x, y) = an.oriented(&a, &b);
            let (x, y) = (x.slice(c.lo, c.hi), y.slice(c.lo, c.hi));
            let k = an.n_a;
            let g = build_g_sequence(&x, &y, k, &an.blocks).unwrap();
            for (i, level) in g.levels.iter().enumerate() {
                // padded codomain: only the first k - i coordinates are filled
                for v in level.values.iter().chain([&level.infinity]) {
                    prop_assert!(v[k - i..].iter().all(|&d| d == 0));
                }
                let mut seq: Vec<&Vec<u64>> = level.values.iter().collect();
                seq.push(&level.infinity);
                prop_assert!(seq.windows(2).all(|w| w[0] < w[1]));
            }
            for i in 1..k {
                let (up, low) = (&g.levels[i], &g.levels[i - 1]);
                for (&b1, g1) in up.members.iter().zip(&up.values) {
                    for (&b2, g2) in low.members.iter().zip(&low.values) {
                        prop_assert_eq!(x[b1].cmp(&y[b2]), g1.cmp(g2));
                    }
                }
            }
        }
    }
}
