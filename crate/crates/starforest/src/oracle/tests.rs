use super::*;
use crate::constructions::{
    berge_forest_small_r, berge_star_extremal, complete_uniform, copies,
};
use crate::hypercore::canonical_form;

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn berge(k: usize, l: usize) -> ForbiddenFamily {
    ForbiddenFamily::all(Pattern::BergeStarForest { k, l })
}

fn matching(k: usize) -> ForbiddenFamily {
    ForbiddenFamily::all(Pattern::Matching { k })
}

fn expansion(k: usize, l: usize) -> ForbiddenFamily {
    ForbiddenFamily::all(Pattern::ExpansionStarForest { k, l })
}

#[test]
fn matching_oracle_small_graph() {
    let report = exact_turan(5, 2, matching(2), opts()).unwrap();
    assert_eq!(report.optimum, 4);
    assert_eq!(report.status, ReportStatus::Exact);
    // the only extremal class is the 4-edge star
    assert_eq!(report.extremal.len(), 1);
    assert_eq!(report.optimum, naive_exact_turan(5, 2, matching(2)).unwrap());
}

#[test]
fn berge_star_oracle_small() {
    let report = exact_turan(6, 3, berge(1, 2), opts()).unwrap();
    assert_eq!(report.optimum, 2);
    assert_eq!(report.status, ReportStatus::Exact);
    assert_eq!(report.optimum, naive_exact_turan(6, 3, berge(1, 2)).unwrap());
    // unique extremal class: two disjoint triples
    let two_triples = copies(&complete_uniform(3, 3), 2).unwrap();
    let canon = String::from_utf8(canonical_form(&two_triples).unwrap()).unwrap();
    assert_eq!(report.extremal, vec![canon]);
}

#[test]
fn unconstrained_family_gives_complete_hypergraph() {
    let report = exact_turan(6, 3, berge(1, 100), opts()).unwrap();
    assert_eq!(report.optimum, 20);
    assert_eq!(report.extremal.len(), 1);
}

#[test]
fn oracle_matches_naive_on_small_sweep() {
    let cases: Vec<(usize, usize, ForbiddenFamily)> = vec![
        (5, 2, matching(2)),
        (6, 2, matching(2)),
        (5, 2, ForbiddenFamily::all(Pattern::GraphStarForest { k: 2, l: 2 })),
        (6, 2, ForbiddenFamily::all(Pattern::GraphStarForest { k: 1, l: 3 })),
        (6, 3, berge(1, 2)),
        (6, 3, berge(1, 3)),
        (6, 3, berge(2, 2)),
        (5, 3, expansion(1, 2)),
        (6, 3, expansion(2, 1)),
        (6, 3, matching(2)),
        (5, 2, ForbiddenFamily::linear(Pattern::Matching { k: 2 })),
        (6, 3, ForbiddenFamily::linear(Pattern::BergeStarForest { k: 1, l: 3 })),
    ];
    for (n, r, family) in cases {
        let exact = exact_turan(n, r, family, opts()).unwrap();
        let naive = naive_exact_turan(n, r, family).unwrap();
        assert_eq!(
            exact.optimum, naive,
            "n={n} r={r} family={:?}",
            family
        );
        assert_eq!(exact.status, ReportStatus::Exact);
    }
}

#[test]
fn oracle_monotone_in_n() {
    let mut last = 0;
    for n in 3..7 {
        let report = exact_turan(n, 3, berge(1, 2), opts()).unwrap();
        assert!(report.optimum >= last, "optimum dropped at n={n}");
        last = report.optimum;
    }
}

#[test]
fn oracle_dominates_construction() {
    let construction = berge_star_extremal(6, 2, 3).unwrap();
    let report = exact_turan(6, 3, berge(1, 2), opts()).unwrap();
    assert!(report.optimum >= construction.hypergraph.edge_count() as u64);
    assert_eq!(report.optimum, construction.hypergraph.edge_count() as u64);
}

#[test]
fn extremal_examples_are_free_and_optimal() {
    let report = exact_turan(6, 3, berge(2, 2), opts()).unwrap();
    assert!(!report.extremal.is_empty());
    for text in &report.extremal {
        let h = crate::hypercore::parse_hypergraph(text).unwrap();
        assert_eq!(h.edge_count() as u64, report.optimum);
        let detection = Pattern::BergeStarForest { k: 2, l: 2 }
            .detect(&h, SearchBudget::default())
            .unwrap();
        assert!(detection.is_exhausted(), "extremal example must be free");
    }
}

#[test]
fn clique_counting() {
    let k5 = Graph::from_hypergraph(complete_uniform(5, 2)).unwrap();
    assert_eq!(count_cliques(&k5, 3), 10);

    let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
    assert_eq!(count_cliques(&c5, 3), 0);
    assert_eq!(clique_hypergraph(&c5, 3).edge_count(), 0);

    let two_k4 = copies(&complete_uniform(4, 2), 2).unwrap();
    let g = Graph::from_hypergraph(two_k4).unwrap();
    assert_eq!(count_cliques(&g, 3), 8);

    let k4 = Graph::from_hypergraph(complete_uniform(4, 2)).unwrap();
    assert_eq!(clique_hypergraph(&k4, 3), complete_uniform(4, 3));
}

#[test]
fn clique_hypergraph_of_join_matches_clique_union_construction() {
    // apex joined to three triangles: its 3-cliques form the same hypergraph
    // as the clique-union construction on (n, l, k, r) = (10, 3, 2, 3)
    let mut pairs: Vec<(usize, usize)> = (1..10).map(|v| (0, v)).collect();
    for class in 0..3 {
        let base = 1 + class * 3;
        pairs.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)]);
    }
    let g = Graph::new(10, &pairs).unwrap();
    let cliques = clique_hypergraph(&g, 3);
    let construction = berge_forest_small_r(10, 2, 3, 3).unwrap().hypergraph;
    assert_eq!(cliques, construction);
}

#[test]
fn generalized_turan_small_cases() {
    // no two disjoint edges: the densest clique is a triangle, so no K_4
    let report = exact_generalized_turan(8, 4, 2, 1, opts()).unwrap();
    assert_eq!(report.optimum, 0);
    assert_eq!(report.status, ReportStatus::Exact);

    // max degree 2: triangle components only
    let report = exact_generalized_turan(7, 3, 1, 3, opts()).unwrap();
    assert_eq!(report.optimum, 2);
}

#[test]
fn worker_counts_agree() {
    let sequential = exact_turan(6, 3, berge(1, 3), opts()).unwrap();
    let parallel = exact_turan(
        6,
        3,
        berge(1, 3),
        SearchOptions {
            workers: 4,
            ..opts()
        },
    )
    .unwrap();
    assert_eq!(sequential, parallel);
    let a = serde_json::to_string(&sequential).unwrap();
    let b = serde_json::to_string(&parallel).unwrap();
    assert_eq!(a, b);
}

#[test]
fn node_cap_reports_capped() {
    let report = exact_turan(
        6,
        3,
        berge(1, 3),
        SearchOptions {
            node_cap: 3,
            ..opts()
        },
    )
    .unwrap();
    assert_eq!(report.status, ReportStatus::Capped);
}

#[test]
fn size_guards() {
    assert!(matches!(
        exact_turan(17, 3, berge(1, 2), opts()),
        Err(OracleError::TooLarge(_))
    ));
    assert!(matches!(
        exact_turan(6, 3, ForbiddenFamily::all(Pattern::GraphStarForest { k: 1, l: 2 }), opts()),
        Err(OracleError::WrongUniformity(3))
    ));
    assert!(naive_exact_turan(7, 3, berge(1, 2)).is_err());
}
