mod common;

use std::collections::BTreeSet;

use cliquesearch::{
    all_cliques, get_max_clique, heuristic_clique, max_clique_search, verify_clique, CliqueOutcome,
    Graph, SearchParams, SearchState, VertexId,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;

fn exhaustive(g: &Graph) -> (Vec<u64>, SearchState) {
    let mut state = SearchState::new();
    let outcome = get_max_clique(g, &SearchParams::exhaustive(), &mut state).unwrap();
    (outcome.clique().unwrap().to_vec(), state)
}

#[test]
fn dfs_matches_brute_force_on_g15_half() {
    let mut rng = StdRng::seed_from_u64(15);
    for _ in 0..100 {
        let g = random_graph(&mut rng, 15, 0.5);
        let params = SearchParams {
            time_limit: 0.0,
            ..SearchParams::default()
        };
        let mut state = SearchState::new();
        max_clique_search(&g, &params, &mut state).unwrap();
        assert!(state.search_done());
        assert_eq!(state.best_clique().len(), brute_omega(&g));
        assert!(labels_form_clique(&g, &state.best_labels(&g)));
    }
}

#[test]
fn completed_search_is_maximal() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..60 {
        let n = rng.gen_range(5..20);
        let g = random_graph(&mut rng, n, 0.4);
        let (clique, _) = exhaustive(&g);
        let ids: Vec<VertexId> = clique.iter().map(|&l| g.id_of(l).unwrap()).collect();
        for v in 0..g.n_vertices() as VertexId {
            if !ids.contains(&v) {
                assert!(
                    !ids.iter().all(|&u| g.has_edge(u, v)),
                    "clique extends by {v}"
                );
            }
        }
    }
}

#[test]
fn heuristic_is_a_valid_lower_bound() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let n = rng.gen_range(1..20);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let h = heuristic_clique(&g);
        assert!(verify_clique(&g, &h).unwrap());
        assert!(h.len() <= brute_omega(&g));
        assert!(!h.is_empty());
    }
}

#[test]
fn fixed_input_gives_identical_cliques() {
    let mut rng = StdRng::seed_from_u64(5);
    let g = random_graph(&mut rng, 60, 0.3);
    let (a, _) = exhaustive(&g);
    let (b, _) = exhaustive(&g);
    assert_eq!(a, b);
}

#[test]
fn bounds_are_honored() {
    let mut rng = StdRng::seed_from_u64(8);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 16, 0.6);
        let omega = brute_omega(&g);
        for upper in 1..=omega + 1 {
            let params = SearchParams {
                upper_bound: upper,
                ..SearchParams::exhaustive()
            };
            let mut state = SearchState::new();
            let outcome = get_max_clique(&g, &params, &mut state).unwrap();
            assert_eq!(outcome.size(), upper.min(omega));
            assert!(state.search_done());
        }
        for lower in 1..=omega + 1 {
            let params = SearchParams {
                lower_bound: lower,
                use_heuristic: false,
                time_limit: 0.0,
                ..SearchParams::default()
            };
            let outcome = get_max_clique(&g, &params, &mut SearchState::new()).unwrap();
            if lower <= omega {
                assert_eq!(outcome.size(), omega);
            } else {
                assert_eq!(
                    outcome,
                    CliqueOutcome::NotFound {
                        best_size: 0,
                        lower_bound: lower
                    }
                );
            }
        }
    }
}

#[test]
fn resumed_search_matches_single_run() {
    let mut rng = StdRng::seed_from_u64(21);
    let g = random_graph(&mut rng, 220, 0.5);
    let (single, _) = exhaustive(&g);

    let params = SearchParams {
        time_limit: 0.001,
        continue_search: true,
        use_heuristic: true,
        ..SearchParams::default()
    };
    let mut state = SearchState::new();
    let mut calls = 0;
    let mut last = CliqueOutcome::Found(vec![]);
    while !state.search_done() {
        last = get_max_clique(&g, &params, &mut state).unwrap();
        calls += 1;
        if let Some(c) = last.clique() {
            assert!(verify_clique(&g, c).unwrap());
        }
    }
    assert!(calls > 1, "search finished in one slice; graph too easy");
    assert_eq!(last.size(), single.len());
}

#[test]
fn reset_mid_search_equals_fresh_state() {
    let mut rng = StdRng::seed_from_u64(34);
    let g = random_graph(&mut rng, 200, 0.5);
    let mut state = SearchState::new();
    let slice = SearchParams {
        time_limit: 0.001,
        continue_search: true,
        ..SearchParams::default()
    };
    get_max_clique(&g, &slice, &mut state).unwrap();
    state.reset();

    let bounded = SearchParams {
        upper_bound: 6,
        ..SearchParams::exhaustive()
    };
    let after_reset = get_max_clique(&g, &bounded, &mut state).unwrap();
    let fresh = get_max_clique(&g, &bounded, &mut SearchState::new()).unwrap();
    assert_eq!(after_reset, fresh);
}

#[test]
fn g12_triangles_match_cubic_oracle() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..30 {
        let g = random_graph(&mut rng, 12, 0.5);
        let found: Vec<Vec<u64>> = all_cliques(&g, 3).unwrap().collect();
        let unique: BTreeSet<Vec<u64>> = found.iter().cloned().collect();
        assert_eq!(unique.len(), found.len());
        assert_eq!(unique, brute_triangles(&g));
    }
}

#[test]
fn stream_yields_subcliques_of_planted_clique() {
    let mut rng = StdRng::seed_from_u64(99);
    let g = planted_clique(&mut rng, 400, 1500, 9);
    let (clique, _) = exhaustive(&g);
    assert_eq!(clique.len(), 9);
    let nines: Vec<Vec<u64>> = all_cliques(&g, 9).unwrap().collect();
    assert_eq!(nines, vec![clique.clone()]);
    let eights: Vec<Vec<u64>> = all_cliques(&g, 8).unwrap().collect();
    let inside = eights
        .iter()
        .filter(|c| c.iter().all(|l| clique.contains(l)))
        .count();
    assert_eq!(inside, 9);
    assert!(eights.iter().all(|c| labels_form_clique(&g, c)));
    assert_eq!(all_cliques(&g, 10).unwrap().count(), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_is_complete_and_unique(seed in any::<u64>(), n in 1usize..=14, p in 0.1f64..0.9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p);
        for k in 1..=n + 1 {
            let found: Vec<Vec<u64>> = all_cliques(&g, k).unwrap().collect();
            let unique: BTreeSet<Vec<u64>> = found.iter().cloned().collect();
            prop_assert_eq!(unique.len(), found.len());
            prop_assert_eq!(unique, brute_k_cliques(&g, k));
        }
    }

    #[test]
    fn search_optimal_on_small_graphs(seed in any::<u64>(), n in 0usize..=20, p in 0.05f64..0.95, heuristic in any::<bool>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p);
        let params = SearchParams { use_heuristic: heuristic, time_limit: 0.0, ..SearchParams::default() };
        let outcome = get_max_clique(&g, &params, &mut SearchState::new()).unwrap();
        let clique = outcome.clique().unwrap();
        prop_assert_eq!(clique.len(), brute_omega(&g));
        prop_assert!(labels_form_clique(&g, clique));
    }
}
