use chordpow::chordal::{check_decomposition, decompose, is_chordal};
use chordpow::cones::{
    entrywise_power, random_psd_for_graph, relative_frobenius_error,
    split_by_decomposition, three_factor_form, CliqueSumSampler, DEFAULT_TOL_SCALE,
    DEFAULT_WITNESS_THRESHOLD,
};
use chordpow::exponent::{
    find_counterexample, hset_complete, superadditive_powers, Membership, SearchConfig,
    WitnessReport,
};
use chordpow::graph::{max_near_complete_order_fast, parse_graph_stream};
use chordpow::{Graph, GraphFamily, PowerFamily};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_family() -> impl Strategy<Value = PowerFamily> {
    prop_oneof![
        Just(PowerFamily::Plain),
        Just(PowerFamily::Odd),
        Just(PowerFamily::Even)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn edge_list_and_json_roundtrip(g in arb_graph(12)) {
        prop_assert_eq!(&Graph::parse_edge_list(&g.to_edge_list()).unwrap(), &g);
        prop_assert_eq!(&Graph::from_json(&g.to_json()).unwrap(), &g);
        let stream = format!("{}---\n{}", g.to_edge_list(), g.to_edge_list());
        let parsed: Vec<Graph> = parse_graph_stream(&stream).into_iter().map(Result::unwrap).collect();
        prop_assert_eq!(parsed, vec![g.clone(), g]);
    }

    #[test]
    fn powers_preserve_pattern(
        g in arb_graph(8),
        seed in any::<u64>(),
        alpha in 0.05f64..6.0,
        family in arb_family(),
    ) {
        let sampler = CliqueSumSampler::new(&g, 1).nonnegative(family == PowerFamily::Plain);
        let m = sampler.sample(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(m.conforms_to_pattern(&g).unwrap());
        let p = entrywise_power(&m, alpha, family).unwrap();
        prop_assert!(p.conforms_to_pattern(&g).unwrap());
    }

    #[test]
    fn near_complete_order_is_monotone(g in arb_graph(9), i in 0usize..9, j in 0usize..9) {
        prop_assume!(g.n() >= 2);
        let (i, j) = (i % g.n(), j % g.n());
        prop_assume!(i != j);
        let before = max_near_complete_order_fast(&g).unwrap();
        let mut h = g.clone();
        h.add_edge(i, j).unwrap();
        prop_assert!(max_near_complete_order_fast(&h).unwrap() >= before);
    }

    #[test]
    fn exact_membership_is_monotone(n in 2usize..12, family in arb_family(), k in 0u32..200) {
        let h = hset_complete(n, family).unwrap();
        let s = superadditive_powers(n, family).unwrap();
        let a = f64::from(k) / 16.0;
        for set in [&h, &s] {
            if set.membership(a) == Membership::Member && a >= set.ray_start {
                prop_assert_eq!(set.membership(a + 0.5), Membership::Member);
            }
            if a < set.ray_start && a.fract() != 0.0 {
                prop_assert_eq!(set.membership(a), Membership::NonMember);
            }
        }
    }

    #[test]
    fn split_and_factorization_roundtrip(seed in 0u64..10_000, n in 4usize..10) {
        let g = GraphFamily::RandomChordal { n, density: 0.5, seed }.generate().unwrap();
        let Some(d) = decompose(&g).unwrap() else { return Ok(()); };
        prop_assert!(check_decomposition(&g, &d).unwrap());
        let m = random_psd_for_graph(&g, 3, seed);
        let (m1, m2) = split_by_decomposition(&m, &d).unwrap();
        prop_assert!(relative_frobenius_error(&m1.add(&m2).unwrap(), &m).unwrap() <= 1e-10);
        let f = three_factor_form(&m, &d).unwrap();
        prop_assert!(relative_frobenius_error(&f.reconstruct().unwrap(), &m).unwrap() <= 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn witnesses_reverify_from_json(n in 3usize..7, gap in 1u32..8, family in arb_family()) {
        let g = GraphFamily::Complete { n }.generate().unwrap();
        let alpha = (n - 2) as f64 - f64::from(gap) / 8.0;
        prop_assume!(alpha > 0.0 && alpha.fract() != 0.0);
        let w = find_counterexample(&g, alpha, family, &SearchConfig::default(), u64::from(gap))
            .unwrap()
            .expect("witness below the critical exponent");
        let back = WitnessReport::from_json(&w.to_json()).unwrap();
        let check = back.verify(DEFAULT_TOL_SCALE, DEFAULT_WITNESS_THRESHOLD).unwrap();
        prop_assert!(check.valid());
        prop_assert!(is_chordal(&back.graph));
    }
}
