mod common;

use common::*;
use proptest::prelude::*;
use wordrep::enumerate::generate;
use wordrep::graph::{add_apex, Graph};
use wordrep::orientation::*;
use wordrep::words::{word_to_graph, Word};

fn orientation(g: &Graph, a: &Arcs) -> Orientation {
    Orientation::from_arcs(g.clone(), &arcs_of(a)).unwrap()
}

fn all_small_graphs(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(|n| generate(n, false).unwrap().graphs).collect()
}

#[test]
fn leftmost_orientations_of_all_short_words_are_semi_transitive() {
    let mut checked = 0;
    for n in 1..=5 {
        dense_words(n, 8, |v| {
            let o = word_to_orientation(&Word::new(v.to_vec()).unwrap()).unwrap();
            assert!(is_semi_transitive(&o), "{v:?}");
            checked += 1;
        });
    }
    assert!(checked > 100_000);
}

#[test]
fn semi_transitive_search_matches_exhaustive_orientation_oracle() {
    for g in all_small_graphs(5) {
        let found = find_semi_transitive(&g, &SearchConfig::default()).unwrap();
        assert_eq!(found.verdict(), Some(brute_has_semi_transitive(&g)), "{g}");
        if let Some(o) = found.witness {
            let a: Arcs = (0..g.n()).map(|u| (0..g.n()).map(|v| o.has_arc(u + 1, v + 1)).collect()).collect();
            assert!(brute_semi_transitive(&a));
        }
    }
}

#[test]
fn transitive_search_matches_exhaustive_orientation_oracle() {
    for g in all_small_graphs(5).into_iter().chain(generate(6, true).unwrap().graphs) {
        let found = find_transitive(&g, &SearchConfig::default()).unwrap();
        assert_eq!(found.verdict(), Some(brute_is_comparability(&g)), "{g}");
    }
}

#[test]
fn every_graph_on_five_vertices_is_representable() {
    let graphs = all_small_graphs(5);
    assert_eq!(graphs.len(), 1 + 2 + 4 + 11 + 34);
    assert_eq!(generate(5, false).unwrap().len(), 34);
    for g in graphs {
        assert!(is_word_representable(&g).unwrap(), "{g}");
        assert!(is_word_representable(&g.complement()).unwrap(), "{g}");
    }
}

#[test]
fn apex_equivalence_on_small_graphs() {
    for h in all_small_graphs(5) {
        let direct = is_word_representable(&add_apex(&h).unwrap()).unwrap();
        assert_eq!(direct, apex_representability_check(&h).unwrap(), "{h}");
    }
}

#[test]
fn neighborhoods_of_representable_graphs_are_comparability() {
    for g in all_small_graphs(6) {
        if is_word_representable(&g).unwrap() {
            assert!(neighborhoods_are_comparability(&g).unwrap(), "{g}");
        }
    }
}

#[test]
fn coloring_orientations_are_semi_transitive() {
    let mut colorable = 0;
    for g in all_small_graphs(7) {
        if let Some(c) = three_color(&g).witness {
            let o = orientation_from_coloring(&g, &c).unwrap();
            assert!(is_semi_transitive(&o), "{g}");
            colorable += 1;
        }
    }
    assert!(colorable > 500);
}

#[test]
fn neighborhood_filter_is_not_sufficient() {
    for g in comparability_neighborhood_examples() {
        assert!(neighborhoods_are_comparability(&g).unwrap());
        assert!(!is_word_representable(&g).unwrap());
        assert!(find_semi_transitive(&g, &SearchConfig::default()).unwrap().is_refuted());
    }
}

#[test]
fn decision_agrees_with_leftmost_orientations_of_representants() {
    proptest!(|(v in arb_word(7, 20))| {
        let word = Word::new(v).unwrap();
        let g = word_to_graph(&word).unwrap();
        prop_assert!(is_word_representable(&g).unwrap());
    });
}

proptest! {
    #[test]
    fn shortcut_check_matches_path_oracle((g, a) in arb_oriented(1, 7)) {
        let o = orientation(&g, &a);
        prop_assert_eq!(is_semi_transitive(&o), brute_semi_transitive(&a));
        prop_assert_eq!(is_transitive(&o), brute_transitive(&a) );
    }

    #[test]
    fn transitive_implies_semi_transitive((g, a) in arb_oriented(1, 8)) {
        let o = orientation(&g, &a);
        if is_transitive(&o) {
            prop_assert!(is_semi_transitive(&o));
        }
        let r = o.reversed();
        prop_assert_eq!(is_semi_transitive(&r), is_semi_transitive(&o));
    }

    #[test]
    fn random_graphs_agree_with_oracle(g in arb_graph(4, 6)) {
        prop_assume!(g.edge_count() <= 12);
        prop_assert_eq!(is_word_representable(&g).unwrap(), brute_has_semi_transitive(&g));
    }
}
