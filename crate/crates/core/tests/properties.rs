use fibercone::algebra::{
    is_unmixed, nonzerodivisor_test, nonzerodivisor_via_one_covers, satisfies_wsc, sum_stays_basic_sampled,
    zero_divisor_witness, domain_criterion_via_covers,
};
use fibercone::covers::{decompose_into_one_covers, enumerate_basic, enumerate_basic_with, is_basic};
use fibercone::drawing::{
    check_eligible, descending_sequence_to_cover, first_early_partner, gdim_with, last_early_partner, r_of,
};
use fibercone::generate::{generate, whisker, GraphSpec};
use fibercone::hilbert::{hilbert_counts, hilbert_function};
use fibercone::hypergraph::{enumerate_basic_h, hyper_counts, WeightedHypergraph, DEFAULT_BOX_BUDGET};
use fibercone::lattice::build_lattice;
use fibercone::oracle::{brute_basic_covers, permutation_gdim};
use fibercone::{BipartiteGraph, Exec, Side};
use proptest::prelude::*;

/// Bipartite graph with A = 1..=a, B = a+1..=a+b and the edges picked by `mask`.
fn bipartite(a: usize, b: usize, mask: u32) -> BipartiteGraph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in 0..b {
            if mask >> (i * b + j) & 1 == 1 {
                edges.push((i + 1, a + j + 1));
            }
        }
    }
    BipartiteGraph::from_edges(a + b, &edges).unwrap()
}

fn small_graph(max_side: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_side, 1..=max_side, any::<u32>())
        .prop_map(|(a, b, m)| bipartite(a, b, m))
        .prop_filter("needs an edge", |g| g.has_edges())
}

fn small_tree() -> impl Strategy<Value = BipartiteGraph> {
    (2usize..=9, any::<u64>()).prop_map(|(n, seed)| generate(&GraphSpec::RandomTree { n, seed }).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bipartition_is_proper(g in small_graph(5)) {
        for &(u, v) in g.edges() {
            prop_assert_ne!(g.side(u), g.side(v));
        }
    }

    #[test]
    fn strip_isolated_is_idempotent(g in small_graph(5)) {
        let once = g.strip_isolated().unwrap().graph;
        let twice = once.strip_isolated().unwrap().graph;
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(once.num_edges(), g.num_edges());
    }

    #[test]
    fn text_round_trip(g in small_graph(5)) {
        prop_assert_eq!(BipartiteGraph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn enumeration_matches_brute_force(g in small_graph(4), k in 1u32..=3) {
        let fast: Vec<Vec<u32>> = enumerate_basic(&g, k).unwrap().covers.into_iter().map(|c| c.values).collect();
        prop_assert_eq!(fast, brute_basic_covers(g.n(), g.edges(), k));
    }

    #[test]
    fn policies_agree(g in small_graph(5), k in 1u32..=4) {
        prop_assert_eq!(
            enumerate_basic_with(&g, k, Exec::Sequential).unwrap(),
            enumerate_basic_with(&g, k, Exec::Parallel).unwrap()
        );
        let s = gdim_with(&g, Exec::Sequential).unwrap();
        let p = gdim_with(&g, Exec::Parallel).unwrap();
        prop_assert_eq!(s.report(), p.report());
    }

    #[test]
    fn entries_bounded_scaling_and_decomposition(g in small_graph(4), k in 1u32..=3) {
        for c in enumerate_basic(&g, k).unwrap().covers {
            prop_assert!(c.values.iter().all(|&x| x <= k));
            for t in 2..=3 {
                prop_assert!(is_basic(&g, &c.scale(t)).unwrap());
            }
            let parts = decompose_into_one_covers(&g, &c).unwrap();
            prop_assert_eq!(parts.len(), k as usize);
            let mut sum = vec![0u32; g.n()];
            for p in &parts {
                prop_assert!(is_basic(&g, p).unwrap());
                for (s, x) in sum.iter_mut().zip(&p.values) {
                    *s += x;
                }
            }
            prop_assert_eq!(sum, c.values);
        }
    }

    #[test]
    fn disjoint_union_product(x in small_graph(3), y in small_graph(3)) {
        let u = x.disjoint_union(&y);
        let (hx, hy, hu) = (
            hilbert_counts(&x, 5, Exec::Sequential).unwrap(),
            hilbert_counts(&y, 5, Exec::Sequential).unwrap(),
            hilbert_counts(&u, 5, Exec::Sequential).unwrap(),
        );
        for k in 0..5 {
            prop_assert_eq!(hu[k], hx[k] * hy[k]);
        }
        let gd = |g: &BipartiteGraph| gdim_with(g, Exec::Sequential).unwrap().gdim;
        prop_assert_eq!(gd(&u), gd(&x) + gd(&y) - 1);
    }

    #[test]
    fn gdim_matches_permutation_search(g in small_graph(4)) {
        prop_assert_eq!(gdim_with(&g, Exec::Parallel).unwrap().gdim, permutation_gdim(&g).unwrap());
    }

    #[test]
    fn sandwich(g in small_graph(4)) {
        let p = hilbert_function(&g, 12).unwrap();
        let gd = gdim_with(&g, Exec::Parallel).unwrap().gdim;
        if let Some(d) = p.dim {
            prop_assert!(gd <= d);
            prop_assert!(d as usize <= g.a_non_isolated() + 1);
        }
    }

    #[test]
    fn optimal_drawings_are_eligible(g in small_graph(5)) {
        let res = gdim_with(&g, Exec::Parallel).unwrap();
        let d = &res.drawing;
        prop_assert_eq!(r_of(&g, d), res.r);
        // Only components without edges past r can be ineligible, and then
        // the offending vertex is isolated.
        if g.strip_isolated().unwrap().removed.is_empty() {
            prop_assert!(check_eligible(&g, d).is_ok());
        }
        let r = res.r;
        for &(x, y) in g.edges() {
            let (u, v) = if g.side(x) == Side::A { (x, y) } else { (y, x) };
            let (pu, pv) = (d.position(u), d.position(v));
            if pu >= r && pv >= r {
                let m = first_early_partner(&g, d, r, pu);
                let big_m = last_early_partner(&g, d, r, pv);
                if let (Some(m), Some(big_m)) = (m, big_m) {
                    prop_assert!(m <= big_m);
                }
            }
        }
    }

    #[test]
    fn injection_is_basic_and_distinct(g in small_graph(4), k in 1u32..=3) {
        let res = gdim_with(&g, Exec::Sequential).unwrap();
        prop_assume!(g.strip_isolated().unwrap().removed.is_empty());
        let mut seen = Vec::new();
        let mut omega = vec![0u32; res.r];
        loop {
            if omega.windows(2).all(|w| w[0] >= w[1]) {
                let c = descending_sequence_to_cover(&g, &res.drawing, &omega, k).unwrap();
                prop_assert!(is_basic(&g, &c).unwrap());
                seen.push(c.values);
            }
            let Some(p) = (0..omega.len()).rev().find(|&p| omega[p] < k) else { break };
            omega[p] += 1;
            omega[p + 1..].iter_mut().for_each(|x| *x = 0);
        }
        let total = seen.len();
        seen.sort();
        seen.dedup();
        prop_assert_eq!(seen.len(), total);
    }

    #[test]
    fn domain_characterisations_agree(g in small_graph(5)) {
        let wsc = satisfies_wsc(&g).holds;
        prop_assert_eq!(wsc, domain_criterion_via_covers(&g).unwrap());
        if wsc {
            prop_assert!(zero_divisor_witness(&g, 3).unwrap().is_none());
        }
        if is_unmixed(&g).unwrap() {
            prop_assert!(wsc);
        }
    }

    #[test]
    fn nonzerodivisor_conditions_agree(g in small_graph(4), k in 1u32..=2) {
        for b in enumerate_basic(&g, k).unwrap().covers {
            let adj = nonzerodivisor_test(&g, &b).unwrap();
            prop_assert_eq!(adj, nonzerodivisor_via_one_covers(&g, &b).unwrap());
            if adj {
                prop_assert!(sum_stays_basic_sampled(&g, &b, 2).unwrap());
            }
        }
    }

    #[test]
    fn tree_drawings_keep_late_edges_apart(t in small_tree()) {
        let res = gdim_with(&t, Exec::Sequential).unwrap();
        for &(x, y) in t.edges() {
            prop_assert!(res.drawing.position(x) < res.r || res.drawing.position(y) < res.r);
        }
    }

    #[test]
    fn whisker_lattices(t in small_tree()) {
        prop_assume!(t.n() <= 6);
        let g = whisker(&t).unwrap();
        let l = build_lattice(&g).unwrap();
        for rel in l.hibi_relations() {
            prop_assert!(l.relation_holds(&rel));
        }
        let (rank, chains) = l.rank_and_chains();
        let p = hilbert_function(&g, 12).unwrap();
        prop_assert_eq!(Some(rank as u32), p.dim);
        prop_assert_eq!(Some(chains), p.multiplicity.map(num_bigint::BigUint::from));
    }

    #[test]
    fn hypergraph_specialises_to_graphs(g in small_graph(4)) {
        let h = WeightedHypergraph::from_graph(&g);
        for k in 1..=3 {
            prop_assert_eq!(enumerate_basic_h(&h, k).unwrap(), enumerate_basic(&g, k).unwrap());
        }
        prop_assert_eq!(
            hyper_counts(&h, 5, Exec::Parallel, DEFAULT_BOX_BUDGET).unwrap(),
            hilbert_counts(&g, 5, Exec::Parallel).unwrap()
        );
    }
}
