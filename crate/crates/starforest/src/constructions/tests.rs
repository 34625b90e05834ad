use super::*;
use crate::formulas;

#[test]
fn complete_uniform_counts() {
    assert_eq!(complete_uniform(4, 3).edge_count(), 4);
    assert_eq!(complete_uniform(2, 3).edge_count(), 0);
    assert_eq!(complete_uniform(5, 2).edge_count(), 10);
}

#[test]
fn stars_and_copies() {
    let s3 = star_graph(3);
    assert_eq!(s3.n(), 4);
    assert_eq!(s3.edge_count(), 3);

    let s1 = star_graph(1);
    let matching = copies_graph(&s1, 4).unwrap();
    assert_eq!(matching.n(), 8);
    assert_eq!(matching.edge_count(), 4);
    assert!((0..8).all(|v| matching.degree(v).unwrap() == 1));

    let h = complete_uniform(4, 3);
    assert_eq!(copies(&h, 1).unwrap(), h);
}

#[test]
fn expansion_of_star() {
    let s3_plus = expansion(&star_graph(3), 3).unwrap();
    assert_eq!(s3_plus.n(), 7);
    assert_eq!(s3_plus.edge_count(), 3);
    // the three edges share exactly the center
    for (i, e) in s3_plus.edges().iter().enumerate() {
        assert!(e.contains(&0));
        for f in &s3_plus.edges()[i + 1..] {
            let common: Vec<usize> = e.iter().filter(|v| f.contains(v)).copied().collect();
            assert_eq!(common, vec![0]);
        }
    }

    let g = Graph::new(5, &[(0, 1), (2, 3)]).unwrap();
    assert_eq!(&expansion(&g, 2).unwrap(), g.as_hypergraph());

    let m2 = copies_graph(&star_graph(1), 2).unwrap();
    let m2_plus = expansion(&m2, 4).unwrap();
    assert_eq!(m2_plus.edge_count(), 2);
    assert_eq!(m2_plus.n(), 4 + 2 * 2);
    assert!(m2_plus.is_linear());
}

#[test]
fn expansions_are_linear() {
    for (n, pairs) in [
        (4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]),
        (5, vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]),
        (6, vec![(0, 1), (2, 3), (4, 5), (1, 2)]),
    ] {
        let g = Graph::new(n, &pairs).unwrap();
        for r in 2..6 {
            assert!(expansion(&g, r).unwrap().is_linear(), "n={n} r={r}");
        }
    }
}

#[test]
fn circle_regular_small_cases() {
    let h = circle_regular(6, 3, 2).unwrap();
    assert_eq!(
        h.edges(),
        &[vec![0, 1, 2], vec![0, 4, 5], vec![1, 2, 3], vec![3, 4, 5]]
    );
    assert!((0..6).all(|v| h.degree(v).unwrap() == 2));

    assert_eq!(circle_regular(8, 4, 0).unwrap().edge_count(), 0);

    let h = circle_regular(8, 4, 3).unwrap();
    assert_eq!(h.edge_count(), 6);
    assert!((0..8).all(|v| h.degree(v).unwrap() == 3));

    assert!(circle_regular(7, 3, 2).is_err());
    assert!(circle_regular(6, 3, 3).is_err());
    assert!(circle_regular(3, 3, 1).is_err());
}

#[test]
fn lattice_figures() {
    let l43 = lattice(4, 3).unwrap();
    assert_eq!(l43.hypergraph().n(), 64);
    assert_eq!(l43.hypergraph().edge_count(), 48);
    assert!(l43.hypergraph().is_linear());
    assert!((0..64).all(|v| l43.hypergraph().degree(v).unwrap() == 3));

    let l52 = lattice(5, 2).unwrap();
    assert_eq!(l52.hypergraph().n(), 25);
    assert_eq!(l52.hypergraph().edge_count(), 10);
    assert!(l52.hypergraph().is_linear());

    // every color class is a perfect matching
    for lat in [&l43, &l52] {
        let h = lat.hypergraph();
        for (_, class) in lat.color_classes() {
            let mut seen = vec![false; h.n()];
            for &ei in &class {
                for &v in &h.edges()[ei] {
                    assert!(!seen[v], "color class repeats vertex {v}");
                    seen[v] = true;
                }
            }
            assert!(seen.iter().all(|&s| s), "color class must cover all vertices");
        }
    }

    let single = lattice(4, 1).unwrap();
    assert_eq!(single.hypergraph().edge_count(), 1);
    assert_eq!(single.hypergraph().edges()[0], vec![0, 1, 2, 3]);
}

#[test]
fn cartesian_product_counts_and_linearity() {
    // [2]^1 x [3]^1: two 3-edges and three 2-edges
    let h = lattice(2, 1).unwrap().into_hypergraph();
    let g = lattice(3, 1).unwrap().into_hypergraph();
    let p = cartesian_product(&h, &g).unwrap();
    assert_eq!(p.n(), 6);
    assert_eq!(p.edge_count(), 5);
    let mut sizes: Vec<usize> = p.edges().iter().map(|e| e.len()).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
    assert!(p.is_linear());

    // fiber copies over an edgeless factor
    let edgeless = Hypergraph::empty(4, 3);
    let p = cartesian_product(&h, &edgeless).unwrap();
    assert_eq!(p.edge_count(), 4 * h.edge_count());

    // products of lattices stay linear
    let big = cartesian_product(
        lattice(3, 2).unwrap().hypergraph(),
        lattice(4, 1).unwrap().hypergraph(),
    )
    .unwrap();
    assert!(big.is_linear());
}

#[test]
fn colored_product_inherits_colors() {
    let h = lattice(2, 2).unwrap();
    let g = lattice(3, 1).unwrap().into_hypergraph();
    let p = cartesian_product_colored(&h, &g).unwrap();
    let colored: Vec<_> = p.colored_edges().collect();
    // one fiber copy of h's edges per vertex of g
    assert_eq!(colored.len(), g.n() * h.hypergraph().edge_count());
    assert!(colored.iter().all(|(e, _)| e.len() == 2));
    let uncolored = p.multi().edge_count() - colored.len();
    assert_eq!(uncolored, h.hypergraph().n() * g.edge_count());
}

#[test]
fn apex_construction_counts() {
    let base = Hypergraph::empty(4, 3);
    let c = apex_extremal_expansion(5, 2, 3, &base).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 6);
    assert!(c.hypergraph.edges().iter().all(|e| e.contains(&0)));
    assert_eq!(c.labels["A"], vec![0]);

    let base = Hypergraph::empty(4, 2);
    let c = apex_extremal_expansion(6, 3, 2, &base).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 15 - 6);

    let base = complete_uniform(5, 3);
    let c = apex_extremal_expansion(5, 1, 3, &base).unwrap();
    assert_eq!(c.hypergraph, base);

    let bad = apex_extremal_expansion(6, 2, 3, &Hypergraph::empty(4, 3));
    assert!(bad.is_err());
}

#[test]
fn linear_star_forest_small_cases() {
    // one tile of [2]^1 x [3]^1 plus one apex
    let c = linear_star_forest_extremal(7, 2, 2, 3).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 5);
    assert!(c.hypergraph.is_linear());
    let type1 = c
        .hypergraph
        .edges()
        .iter()
        .filter(|e| !e.contains(&0))
        .count();
    assert_eq!(type1, 2);
    assert_eq!(c.hypergraph.edge_count() - type1, 3);

    // k = 1 reduces to a perfect matching of tiles
    let c = linear_star_forest_extremal(9, 1, 2, 3).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 3);
    assert!((0..9).all(|v| c.hypergraph.degree(v).unwrap() == 1));

    // l = 1 gives tile edges joined to the apex only
    let c = linear_star_forest_extremal(5, 2, 1, 3).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 2);
    assert!(c.hypergraph.edges().iter().all(|e| e.contains(&0)));

    assert!(linear_star_forest_extremal(8, 2, 2, 3).is_err());
}

#[test]
fn linear_star_forest_interior_degrees() {
    // every vertex outside the apex set lies in exactly l-1 edges that stay
    // inside B
    for (n, k, l, r) in [(7, 2, 2, 3), (13, 2, 2, 4), (14, 3, 2, 3), (9, 1, 3, 3), (19, 2, 2, 3)] {
        let c = linear_star_forest_extremal(n, k, l, r).unwrap();
        let apexes = k - 1;
        for v in apexes..n {
            let inside = c
                .hypergraph
                .edges()
                .iter()
                .filter(|e| e.contains(&v) && e.iter().all(|&u| u >= apexes))
                .count();
            assert_eq!(inside, l - 1, "n={n} k={k} l={l} r={r} v={v}");
        }
        assert!(c.hypergraph.is_linear());
    }
}

#[test]
fn linear_star_forest_r2_matches_graph_bound() {
    for (n, k, l) in [(9, 2, 2), (10, 3, 2), (13, 2, 3), (11, 4, 1)] {
        let c = linear_star_forest_extremal(n, k, l, 2).unwrap();
        assert!(c.hypergraph.is_linear());
        let expected = formulas::f_linear_construction(n as u64, k as u64, l as u64, 2)
            .unwrap()
            .value;
        assert_eq!(integer(c.hypergraph.edge_count() as u64), expected);
    }
}

#[test]
fn berge_star_construction_counts() {
    let c = berge_star_extremal(8, 4, 3).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 8);
    // two disjoint complete pieces
    assert_eq!(c.labels.len(), 2);

    let c = berge_star_extremal(6, 2, 3).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 2);
    assert!((0..6).all(|v| c.hypergraph.degree(v).unwrap() == 1));

    let c = berge_star_extremal(9, 1, 4).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 0);

    // remainder clique when l does not divide n
    let c = berge_star_extremal(10, 4, 3).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 2 * 4 + 0);
    let c = berge_star_extremal(11, 4, 3).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 2 * 4 + 1);
}

#[test]
fn berge_forest_large_r_cases() {
    let c = berge_forest_large_r(7, 2, 2, 3).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 3);
    assert!(c.hypergraph.edges().iter().all(|e| e.contains(&0)));
    // inner degrees at most l-1
    for v in 1..7 {
        assert!(c.hypergraph.degree(v).unwrap() <= 1);
    }

    // k = 1 coincides with the circular construction
    assert_eq!(
        berge_forest_large_r(8, 1, 3, 4).unwrap().hypergraph,
        berge_star_extremal(8, 3, 4).unwrap().hypergraph
    );

    assert!(berge_forest_large_r(11, 3, 2, 4).is_err());
}

#[test]
fn berge_forest_small_r_cases() {
    let c = berge_forest_small_r(10, 2, 3, 3).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 12);

    let c = berge_forest_small_r(9, 3, 2, 3).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 13);

    let c = berge_forest_small_r(8, 1, 4, 3).unwrap();
    assert_eq!(c.hypergraph, berge_star_extremal(8, 4, 3).unwrap().hypergraph);
}

#[test]
fn berge_forest_small_r_degree_profile() {
    // when l divides n-k+1, every vertex outside the apex set has degree
    // exactly C(l+k-2, r-1)
    for (n, k, l, r) in [(10, 2, 3, 3), (13, 2, 3, 4), (11, 3, 3, 3), (10, 3, 2, 3)] {
        let c = berge_forest_small_r(n, k, l, r).unwrap();
        let expected = formulas::binomial((l + k - 2) as u64, (r - 1) as u64);
        for v in k - 1..n {
            assert_eq!(
                num_bigint::BigInt::from(c.hypergraph.degree(v).unwrap()),
                expected,
                "n={n} k={k} l={l} r={r} v={v}"
            );
        }
    }
    // concrete instance: degree 3 = C(3,2) and apex link of 9 edges
    let c = berge_forest_small_r(10, 3, 2, 3).unwrap();
    let apexes = 2;
    for v in apexes..10 {
        assert_eq!(c.hypergraph.degree(v).unwrap(), 3);
    }
    let h = berge_forest_small_r(10, 2, 3, 3).unwrap().hypergraph;
    assert_eq!(h.degree(0).unwrap(), h.link(0).unwrap().edge_count());
    assert_eq!(h.link(0).unwrap().edge_count(), 9);
}

#[test]
fn llp_graph_cases() {
    let c = llp_extremal_graph(10, 2, 3).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 18);

    let c = llp_extremal_graph(9, 1, 2).unwrap();
    assert_eq!(c.hypergraph.edge_count(), 4);
    assert!((0..9).all(|v| c.hypergraph.degree(v).unwrap() <= 1));

    // l = 1 matches the graph matching bound
    for (n, k) in [(6, 2), (8, 3), (9, 4)] {
        let c = llp_extremal_graph(n, k, 1).unwrap();
        let expected = formulas::f_matching(n as u64, k as u64, 2).unwrap();
        assert_eq!(
            integer(c.hypergraph.edge_count() as u64),
            expected.value,
            "n={n} k={k}"
        );
    }

    assert!(llp_extremal_graph(4, 3, 2).is_err());
}

#[test]
fn llp_quasi_regular_part_has_max_degree_below_l() {
    for (n, k, l) in [(10, 2, 3), (11, 3, 4), (12, 1, 5), (9, 2, 2), (13, 4, 3)] {
        let c = llp_extremal_graph(n, k, l).unwrap();
        let apexes = k - 1;
        for v in apexes..n {
            let inner = c
                .hypergraph
                .edges()
                .iter()
                .filter(|e| e.contains(&v) && e.iter().all(|&u| u >= apexes))
                .count();
            assert!(inner <= l - 1, "n={n} k={k} l={l} v={v}: degree {inner}");
        }
        // total edge count matches the closed form
        let expected = formulas::f_star_forest_graph(n as u64, k as u64, l as u64).unwrap();
        assert_eq!(integer(c.hypergraph.edge_count() as u64), expected.value);
    }
}

#[test]
fn labels_partition_and_serialize() {
    let c = berge_forest_small_r(10, 2, 3, 3).unwrap();
    let text = c.labels_text();
    assert!(text.starts_with("A=0\n"));
    assert!(text.contains("class_0=1 2 3\n"));
    let total: usize = c.labels.values().map(|v| v.len()).sum();
    assert_eq!(total, 10);
}
