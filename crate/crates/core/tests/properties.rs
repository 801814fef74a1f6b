use num_traits::{One, Zero};
use proptest::prelude::*;

use pmcover::bounds::{self, BoundKind};
use pmcover::cover::{greedy_cover, BoundLevel, CoverOptions, Mode};
use pmcover::cuts::{is_r_graph, min_odd_cut, min_odd_cut_brute_force};
use pmcover::exact::ExactAnalyzer;
use pmcover::fractional::{self, bf_double_cover, DoubleCover};
use pmcover::generators;
use pmcover::matching::{enumerate_perfect_matchings, max_weight_perfect_matching, DEFAULT_PM_CAP};
use pmcover::numeric::ratio;
use pmcover::{Multigraph, Rational, VertexSet};

/// A random r-graph with `n <= 12`, described by its generator parameters.
fn small_r_graph() -> impl Strategy<Value = (Multigraph, u32)> {
    (
        prop_oneof![Just(3u32), Just(4), Just(5)],
        0usize..4,
        any::<u64>(),
    )
        .prop_map(|(r, i, seed)| {
            let n = [6, 8, 10, 12][i];
            (generators::random_regular(n, r, seed).unwrap(), r)
        })
}

fn any_multigraph() -> impl Strategy<Value = Multigraph> {
    (2usize..10).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
            let edges = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Multigraph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn boundary_is_symmetric(g in any_multigraph(), bits in any::<u16>()) {
        let n = g.vertex_count();
        let s = VertexSet::new((0..n).filter(|&v| bits >> v & 1 == 1));
        prop_assert_eq!(g.boundary(&s).unwrap(), g.boundary(&s.complement(n)).unwrap());
    }

    #[test]
    fn edge_list_round_trip(g in any_multigraph()) {
        let text = g.to_edge_list();
        let back = Multigraph::parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn tree_min_odd_cut_matches_brute_force((g, _) in small_r_graph(), seed in any::<u64>()) {
        let w = weights_from_seed(g.edge_count(), seed);
        let tree = min_odd_cut(&g, &w).unwrap();
        let brute = min_odd_cut_brute_force(&g, &w, 20).unwrap();
        prop_assert_eq!(&tree.value, &brute.value);
        let direct = g.boundary(&tree.witness).unwrap().iter().fold(Rational::zero(), |acc, e| acc + &w[e]);
        prop_assert_eq!(direct, tree.value);
        prop_assert!(tree.witness.len() % 2 == 1);
        prop_assert!(!tree.witness.contains(0));
    }

    #[test]
    fn uniform_cut_is_at_least_one((g, r) in small_r_graph()) {
        let w = fractional::uniform(&g, r).unwrap();
        let cut = min_odd_cut(&g, w.values()).unwrap();
        prop_assert_eq!(cut.value, Rational::one());
    }

    #[test]
    fn blossom_matches_enumeration((g, _) in small_r_graph(), seed in any::<u64>()) {
        let w = weights_from_seed(g.edge_count(), seed);
        let pms = enumerate_perfect_matchings(&g, DEFAULT_PM_CAP).unwrap();
        let best = pms.iter().map(|m| m.weight(&w)).max().unwrap();
        let got = max_weight_perfect_matching(&g, &w).unwrap();
        prop_assert_eq!(got.weight(&w), best.clone());
        prop_assert_eq!(Some(&got), pms.iter().find(|m| m.weight(&w) == best));
    }

    #[test]
    fn enumeration_is_sorted_and_perfect((g, _) in small_r_graph()) {
        let pms = enumerate_perfect_matchings(&g, DEFAULT_PM_CAP).unwrap();
        prop_assert!(pms.windows(2).all(|p| p[0] < p[1]));
        for pm in &pms {
            let mut seen = vec![0; g.vertex_count()];
            for e in pm.edges().iter() {
                let (u, v) = g.endpoints(e);
                seen[u] += 1;
                seen[v] += 1;
            }
            prop_assert!(seen.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn step_vector_sums_to_one_at_vertices(
        r in 3u32..=6,
        k in 2u32..=10,
        raw in proptest::collection::vec(any::<u32>(), 6),
    ) {
        // Spread k-1 over r slots.
        let mut counts = vec![0u32; r as usize];
        for (i, x) in raw.iter().take(k as usize - 1).enumerate() {
            counts[(*x as usize + i) % r as usize] += 1;
        }
        let mut left = (k - 1) as i64 - counts.iter().sum::<u32>() as i64;
        let mut i = 0;
        while left > 0 {
            counts[i % r as usize] += 1;
            left -= 1;
            i += 1;
        }
        let total = counts.iter().fold(Rational::zero(), |acc, &c| acc + fractional::step_weight(r, k, c).unwrap());
        prop_assert!(total.is_one());
    }

    #[test]
    fn step_vector_entries_in_open_unit_interval(r in 3u32..=8, k in 2u32..=12, c in 0u32..12) {
        prop_assume!(c < k);
        let w = fractional::step_weight(r, k, c).unwrap();
        prop_assert!(w > Rational::zero() && w < Rational::one());
        if r % 2 == 0 {
            prop_assert!(w > ratio(1, r as i64 + 3));
        }
    }

    #[test]
    fn greedy_is_deterministic_and_prefix_closed((g, r) in small_r_graph(), k in 1usize..5) {
        for mode in [Mode::Fast, Mode::ExactLemma] {
            let options = CoverOptions { mode, ..CoverOptions::default() };
            let a = greedy_cover(&g, r, k, options).unwrap();
            let b = greedy_cover(&g, r, k, options).unwrap();
            prop_assert_eq!(&a, &b);
            let longer = greedy_cover(&g, r, k + 1, options).unwrap();
            prop_assert_eq!(&longer.matchings[..k], &a.matchings[..]);
            prop_assert!(longer.fraction >= a.fraction);
        }
    }

    #[test]
    fn greedy_gains_meet_their_certificates((g, r) in small_r_graph(), k in 1usize..6) {
        let rep = greedy_cover(&g, r, k, CoverOptions::default()).unwrap();
        for c in &rep.certificates {
            let actual = Rational::from_integer(c.actual_gain.into());
            prop_assert!(actual >= c.uniform_gain);
            prop_assert!(c.level == BoundLevel::None || actual >= c.predicted_gain);
        }
    }

    #[test]
    fn greedy_sits_between_bound_and_optimum((g, r) in small_r_graph(), k in 1usize..5) {
        let analyzer = ExactAnalyzer::new(&g, DEFAULT_PM_CAP).unwrap();
        let best = analyzer.m_exact(k).unwrap();
        let greedy = greedy_cover(&g, r, k, CoverOptions::exact()).unwrap();
        prop_assert!(greedy.fraction <= best.fraction);
        prop_assert!(greedy.bound <= greedy.fraction);
    }

    #[test]
    fn excessive_index_is_first_full_cover((g, _) in small_r_graph()) {
        let analyzer = ExactAnalyzer::new(&g, DEFAULT_PM_CAP).unwrap();
        let ix = analyzer.excessive_index().unwrap();
        prop_assert!(analyzer.m_exact(ix.value).unwrap().fraction.is_one());
        if ix.value > 1 {
            prop_assert!(!analyzer.m_exact(ix.value - 1).unwrap().fraction.is_one());
        }
    }

    #[test]
    fn multicoloring_uses_every_edge_p_times((g, r) in small_r_graph()) {
        let mc = fractional::multicoloring(&g, r, DEFAULT_PM_CAP).unwrap();
        prop_assert_eq!(mc.matchings.len() as u64, r as u64 * mc.p);
        let mut uses = vec![0u64; g.edge_count()];
        for m in &mc.matchings {
            for e in m.edges().iter() {
                uses[e] += 1;
            }
        }
        prop_assert!(uses.iter().all(|&u| u == mc.p));
    }

    #[test]
    fn double_cover_uses_every_edge_twice((g, r) in small_r_graph()) {
        if let DoubleCover::Found(ms) = bf_double_cover(&g, r, DEFAULT_PM_CAP).unwrap() {
            prop_assert_eq!(ms.len(), 2 * r as usize);
            let mut uses = vec![0; g.edge_count()];
            for m in &ms {
                for e in m.edges().iter() {
                    uses[e] += 1;
                }
            }
            prop_assert!(uses.iter().all(|&u| u == 2));
        }
    }

    #[test]
    fn bounds_are_monotone_and_ordered(r in 3u32..=8, k in 1u32..12) {
        let improved = bounds::bound_improved(r, k).unwrap().value;
        prop_assert!(improved >= bounds::bound_uniform(r, k).unwrap().value);
        prop_assert!(bounds::bound_improved(r, k + 1).unwrap().value >= improved);
        prop_assert!(bounds::bound_uniform(r, k + 1).unwrap().value >= bounds::bound_uniform(r, k).unwrap().value);
        if k + 1 < 2 * r {
            let c = bounds::bound(BoundKind::DoubleCoverConditional, r, k).unwrap().value;
            prop_assert!(bounds::bound(BoundKind::DoubleCoverConditional, r, k + 1).unwrap().value >= c);
        }
        prop_assert!(bounds::in_unit_interval(&improved));
    }
}

fn weights_from_seed(m: usize, seed: u64) -> Vec<Rational> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..m)
        .map(|_| ratio(rng.gen_range(0..30), rng.gen_range(1..8)))
        .collect()
}

#[test]
fn dipoles_are_r_graphs() {
    for r in 1..=8 {
        let d = generators::dipole(r).unwrap();
        assert!(is_r_graph(&d, r as u32).unwrap().is_r_graph);
    }
}
