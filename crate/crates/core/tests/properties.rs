mod common;

use proptest::prelude::*;
use proptest::sample::subsequence;

use sgsr::canon::{automorphism_generators, group_order};
use sgsr::format::{parse_graph6, parse_sg, write_graph6, write_sg};
use sgsr::srsg::negation_param_swap;
use sgsr::{canonical_form, check_srsg, signed_isomorphic, Sign, SignedGraph};

fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        (Just(n), subsequence(pairs, 0..=m), any::<u64>()).prop_map(|(n, edges, signs)| {
            let list: Vec<_> = edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| {
                    (
                        u,
                        v,
                        if signs >> (i % 64) & 1 == 1 {
                            Sign::Neg
                        } else {
                            Sign::Pos
                        },
                    )
                })
                .collect();
            SignedGraph::from_edge_list(n, &list).unwrap()
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (SignedGraph, Vec<usize>)> {
    signed_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn walk_counts_match_dense_square((g, _) in with_permutation(12)) {
        let sq = common::square(&common::sign_matrix(&g));
        for u in 0..g.order() {
            for v in 0..g.order() {
                let w = g.two_walk_counts(u, v);
                prop_assert_eq!(w.pos as i64 - w.neg as i64, sq[u][v]);
                if u != v {
                    let common = (0..g.order()).filter(|&x| g.has_edge(u, x) && g.has_edge(v, x)).count();
                    prop_assert_eq!(w.pos + w.neg, common);
                }
            }
        }
    }

    #[test]
    fn predicate_matches_matrix_oracle(g in signed_graph(9)) {
        prop_assert_eq!(check_srsg(&g).ok(), common::matrix_params(&g));
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in with_permutation(14)) {
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(signed_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g).to_graph().edge_count(), g.edge_count());
    }

    #[test]
    fn canonical_form_agrees_with_brute_force(g in signed_graph(6), h in signed_graph(6)) {
        prop_assert_eq!(signed_isomorphic(&g, &h), common::brute_isomorphic(&g, &h));
    }

    #[test]
    fn single_sign_flip_detected_by_brute_force((g, perm) in with_permutation(6), pick in any::<usize>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (u, v, s) = edges[pick % edges.len()];
        let mut list: Vec<_> = edges.iter().filter(|e| (e.0, e.1) != (u, v)).copied().collect();
        list.push((u, v, s.flip()));
        let h = SignedGraph::from_edge_list(g.order(), &list).unwrap().permute(&perm);
        prop_assert_eq!(signed_isomorphic(&g, &h), common::brute_isomorphic(&g, &h));
    }

    #[test]
    fn automorphism_group_order(g in signed_graph(7)) {
        let gens = automorphism_generators(&g);
        prop_assert_eq!(group_order(g.order(), &gens), common::brute_group_order(&g));
    }

    #[test]
    fn text_formats_round_trip(g in signed_graph(20)) {
        prop_assert_eq!(parse_sg(&write_sg(&g)).unwrap(), g.clone());
        let u = g.underlying();
        prop_assert_eq!(parse_graph6(&write_graph6(&u).unwrap()).unwrap(), u);
    }

    #[test]
    fn switching_and_negation((g, _) in with_permutation(12), subset in any::<u64>()) {
        let mask = subset & ((1u64 << g.order()) - 1);
        let s = g.switch(mask);
        prop_assert_eq!(s.underlying(), g.underlying());
        prop_assert_eq!(s.is_balanced(), g.is_balanced());
        prop_assert_eq!(s.switch(mask), g.clone());
        prop_assert_eq!(g.negate().negate(), g.clone());
        if let Some(b) = g.balancing_switch() {
            prop_assert_eq!(g.switch(b).negative_part().edge_count(), 0);
        }
        if let Ok(p) = check_srsg(&g) {
            prop_assert_eq!(check_srsg(&g.negate()), Ok(p.negated()));
            prop_assert_eq!(negation_param_swap(&g), Ok(true));
        }
    }

    #[test]
    fn degree_triples_are_consistent(g in signed_graph(12)) {
        for v in 0..g.order() {
            let d = g.degree(v);
            let neg = g.neg_neighbours(v).count_ones() as usize;
            let pos = g.pos_neighbours(v).count_ones() as usize;
            prop_assert_eq!(d, pos + neg);
        }
        let profile = g.degrees();
        let nets: Vec<i64> = (0..g.order())
            .map(|v| (0..g.order()).map(|w| g.sign(v, w)).sum())
            .collect();
        let constant = nets.windows(2).all(|w| w[0] == w[1]);
        prop_assert_eq!(profile.net_degree(), if constant { nets.first().copied() } else { None });
    }
}
