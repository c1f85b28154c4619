use proptest::prelude::*;

use corona_core::corecorona::analyze;
use corona_core::graph::{Graph, VertexSet};
use corona_core::larson::{larson_decomposition, verify_decomposition};
use corona_core::matching::{has_augmenting_path, maximum_matching};
use corona_core::oddcycles::{census, CycleKind};
use corona_core::oracle::{self, generate, GenParams, Pattern};

fn in_class() -> impl Strategy<Value = Graph> {
    (0..Pattern::ALL.len(), 5usize..=16, 0.0f64..0.35, any::<u64>()).prop_map(|(i, n, p, seed)| {
        let pattern = Pattern::ALL[i];
        let p = if pattern == Pattern::RandomFiltered { p / 2.0 } else { p };
        generate(pattern, GenParams { n: n.max(pattern.min_n()), p }, seed).unwrap()
    })
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)))
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn analysis_matches_the_oracle(g in in_class()) {
        let r = analyze(&g, false).unwrap();
        prop_assert_eq!(r.alpha, oracle::brute_alpha(&g).unwrap());
        let (core, corona) = oracle::brute_core_corona(&g).unwrap();
        prop_assert_eq!(&r.core, &core);
        prop_assert_eq!(&r.corona, &corona);
        prop_assert_eq!(r.d, oracle::brute_critical(&g).unwrap().d);
        prop_assert_eq!(r.mu, oracle::brute_matching_number(&g).unwrap());
    }

    #[test]
    fn sum_is_within_two_of_twice_alpha(g in in_class()) {
        let r = analyze(&g, false).unwrap();
        prop_assert!((0..=2).contains(&r.k_observed));
        if !r.k_unresolved {
            prop_assert_eq!(r.k_observed, r.k_predicted as i64);
        }
        prop_assert_eq!(r.partition_holds, r.profile.kind != CycleKind::TwoSharingVertex);
    }

    #[test]
    fn core_is_independent_inside_corona(g in in_class()) {
        let r = analyze(&g, false).unwrap();
        prop_assert!(g.is_independent(&r.core));
        prop_assert!(r.core.is_subset(&r.corona));
        prop_assert!(r.j.is_subset(&r.core.union(&r.l)));
    }

    #[test]
    fn decomposition_certifies_itself(g in in_class()) {
        let dec = larson_decomposition(&g);
        let report = verify_decomposition(&g, &dec, 18);
        prop_assert!(report.all_passed(), "{:?}", report);
        prop_assert_eq!(dec.l.union(&dec.lc).len(), g.n());
    }

    #[test]
    fn relabeling_moves_everything_along((g, perm) in in_class().prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })) {
        let h = g.relabel(&perm).unwrap();
        let a = analyze(&g, false).unwrap();
        let b = analyze(&h, false).unwrap();
        let moved = |s: &VertexSet| -> VertexSet { s.iter().map(|v| perm[v]).collect() };
        prop_assert_eq!(moved(&a.core), b.core);
        prop_assert_eq!(moved(&a.corona), b.corona);
        prop_assert_eq!(moved(&a.l), b.l);
        prop_assert_eq!(a.profile.kind, b.profile.kind);
    }

    #[test]
    fn blossom_is_maximum(g in any_graph(11)) {
        let m = maximum_matching(&g);
        prop_assert!(m.is_valid_in(&g));
        prop_assert!(!has_augmenting_path(&g, &m));
        prop_assert_eq!(m.size(), oracle::brute_matching_number(&g).unwrap());
    }

    #[test]
    fn census_agrees_with_cycle_enumeration(g in any_graph(10)) {
        let count = oracle::count_odd_cycles_exact(&g, 3, oracle::CYCLE_BUDGET).unwrap();
        prop_assert_eq!(census(&g).kind, oracle::kind_from_cycles(&count));
    }

    #[test]
    fn out_of_class_is_refused(g in any_graph(10)) {
        let result = analyze(&g, false);
        prop_assert_eq!(result.is_err(), census(&g).kind == CycleKind::OutOfClass);
    }
}
