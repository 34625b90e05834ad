use super::*;
use crate::constructions::{
    apex_extremal_expansion, berge_forest_small_r, complete_uniform, copies, expansion, lattice,
    linear_star_forest_extremal, star_graph,
};
use crate::hypercore::Hypergraph;
use proptest::prelude::*;

fn budget() -> SearchBudget {
    SearchBudget::default()
}

#[test]
fn max_sdr_examples() {
    let triangle = MultiHypergraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
    let (size, w) = max_sdr(&triangle);
    assert_eq!(size, 3);
    assert!(verify_sdr(&triangle, &w).is_ok());

    let doubled = MultiHypergraph::new(1, vec![vec![0], vec![0]]).unwrap();
    assert_eq!(max_sdr(&doubled).0, 1);

    let link = complete_uniform(4, 3).link(1).unwrap();
    assert_eq!(max_sdr(&link).0, 3);
}

fn brute_force_sdr(m: &MultiHypergraph) -> usize {
    fn rec(edges: &[Vec<usize>], i: usize, used: &mut Vec<usize>) -> usize {
        if i == edges.len() {
            return 0;
        }
        let mut best = rec(edges, i + 1, used);
        for &v in &edges[i] {
            if !used.contains(&v) {
                used.push(v);
                best = best.max(1 + rec(edges, i + 1, used));
                used.pop();
            }
        }
        best
    }
    rec(m.edges(), 0, &mut Vec::new())
}

#[test]
fn berge_star_on_complete() {
    let k43 = complete_uniform(4, 3);
    assert!(find_berge_star(&k43, 4, None).is_exhausted());
    for x in 0..4 {
        let w = find_berge_star(&k43, 3, Some(x)).witness().expect("witness");
        assert_eq!(w.center, x);
        assert!(verify_berge_star_forest(&k43, 1, 3, &[w]).is_ok());
    }
    let empty = Hypergraph::empty(5, 3);
    assert!(find_berge_star(&empty, 1, None).is_exhausted());
}

#[test]
fn berge_star_forest_cases() {
    // the clique-union construction has no two disjoint Berge stars
    let h = berge_forest_small_r(10, 2, 3, 3).unwrap().hypergraph;
    assert!(find_berge_star_forest(&h, 2, 3, budget()).is_exhausted());

    // two disjoint complete pieces host one star each
    let two = copies(&complete_uniform(4, 3), 2).unwrap();
    let stars = find_berge_star_forest(&two, 2, 3, budget())
        .witness()
        .expect("witness");
    assert!(verify_berge_star_forest(&two, 2, 3, &stars).is_ok());

    // k = 1 agrees with the single-star search
    for h in [complete_uniform(5, 3), berge_forest_small_r(9, 2, 2, 3).unwrap().hypergraph] {
        for l in 1..5 {
            let single = find_berge_star(&h, l, None);
            let forest = find_berge_star_forest(&h, 1, l, budget());
            assert_eq!(
                single.witness().is_some(),
                forest.witness().is_some(),
                "l={l}"
            );
        }
    }
}

#[test]
fn expansion_star_cases() {
    let all5 = complete_uniform(5, 3);
    let w = find_expansion_star(&all5, 2, None, budget())
        .witness()
        .expect("witness");
    assert!(verify_expansion_star_forest(&all5, 1, 2, &w).is_ok());

    // 3-regular lattice has no degree-4 vertex
    let l43 = lattice(4, 3).unwrap().into_hypergraph();
    assert!(find_expansion_star(&l43, 4, None, budget()).is_exhausted());

    // an expanded star contains itself
    for (l, r) in [(1, 3), (2, 3), (3, 4), (4, 2)] {
        let h = expansion(&star_graph(l), r).unwrap();
        let w = find_expansion_star(&h, l, Some(0), budget())
            .witness()
            .expect("witness");
        assert_eq!(w.stars[0].hyperedges.len(), l);
        assert!(verify_expansion_star_forest(&h, 1, l, &w).is_ok());
    }
}

#[test]
fn expansion_star_forest_cases() {
    // all edges meet the apex: no two disjoint hyperedges
    let apex = apex_extremal_expansion(8, 2, 3, &Hypergraph::empty(7, 3))
        .unwrap()
        .hypergraph;
    assert!(find_expansion_star_forest(&apex, 2, 1, budget()).is_exhausted());

    // the linear construction tolerates only k-1 disjoint expanded stars
    let lsf = linear_star_forest_extremal(7, 2, 2, 3).unwrap().hypergraph;
    assert!(find_expansion_star_forest(&lsf, 2, 2, budget()).is_exhausted());

    // two disjoint expanded stars are found
    let s2p = expansion(&star_graph(2), 3).unwrap();
    let two = copies(&s2p, 2).unwrap();
    let w = find_expansion_star_forest(&two, 2, 2, budget())
        .witness()
        .expect("witness");
    assert!(verify_expansion_star_forest(&two, 2, 2, &w).is_ok());
}

#[test]
fn matching_detection() {
    let two = copies(&complete_uniform(3, 3), 2).unwrap();
    assert!(find_matching(&two, 2, budget()).witness().is_some());
    assert!(find_matching(&two, 3, budget()).is_exhausted());
}

#[test]
fn tiny_budget_is_inconclusive_not_absent() {
    let lsf = linear_star_forest_extremal(13, 2, 2, 3).unwrap().hypergraph;
    let starved = SearchBudget { node_cap: 1 };
    assert_eq!(
        find_expansion_star_forest(&lsf, 2, 2, starved),
        Detection::Inconclusive
    );
}

#[test]
fn witness_verification_rejects_corruption() {
    let two = copies(&complete_uniform(4, 3), 2).unwrap();
    let mut stars = find_berge_star_forest(&two, 2, 3, budget())
        .witness()
        .expect("witness");
    // reuse one hyperedge for two skeleton edges
    let stolen = stars[0].hyperedges[0];
    let mut broken = stars.clone();
    broken[1].hyperedges[0] = stolen;
    assert_eq!(
        verify_berge_star_forest(&two, 2, 3, &broken),
        Err(WitnessError::AssignmentNotInjective)
    );
    // a skeleton edge outside its hyperedge
    let mut broken = stars.clone();
    broken[0].skeleton[0] = (stars[0].center, 7);
    let err = verify_berge_star_forest(&two, 2, 3, &broken);
    assert!(err.is_err());
    // stars sharing a vertex
    stars[1].center = stars[0].center;
    assert!(verify_berge_star_forest(&two, 2, 3, &stars).is_err());

    let s2p = expansion(&star_graph(2), 3).unwrap();
    let double = copies(&s2p, 2).unwrap();
    let w = find_expansion_star_forest(&double, 2, 2, budget())
        .witness()
        .expect("witness");
    let mut shared = w.clone();
    // force a shared leaf between the stars
    shared.stars[1].hyperedges = w.stars[0].hyperedges.clone();
    assert!(matches!(
        verify_expansion_star_forest(&double, 2, 2, &shared),
        Err(WitnessError::EdgeIndicesNotDistinct) | Err(WitnessError::StarsNotDisjoint)
    ));
}

#[test]
fn adl_examples() {
    assert_eq!(adl_bound_ratio(3, 3, 0, 1, 10), integer(0));
    assert_eq!(adl_bound_ratio(2, 5, 1, 2, 8), integer(7));
    assert!(adl_bound(5, 3, &integer(0), 4).is_err());
    assert!(adl_bound(2, 5, &integer(1), 4).is_err());
}

#[test]
fn adl_holds_on_small_hypergraphs() {
    // for any hypergraph with avg degree >= d - eps and max degree <= delta,
    // the number of vertices of degree < d is at most the bound
    let samples = [
        complete_uniform(6, 3),
        lattice(3, 2).unwrap().into_hypergraph(),
        berge_forest_small_r(9, 2, 2, 3).unwrap().hypergraph,
    ];
    for h in &samples {
        let degrees = h.degrees();
        let delta = *degrees.iter().max().unwrap() as u64;
        let total: usize = degrees.iter().sum();
        for d in 1..=delta {
            // choose eps so that avg >= d - eps holds: eps = max(0, d - avg)
            let avg = ratio(total as u64, h.n() as u64);
            let d_rat = integer(d);
            let eps = if d_rat > avg { d_rat - avg } else { integer(0) };
            if eps >= integer(1) {
                continue;
            }
            let bound = adl_bound(d, delta, &eps, h.n() as u64).unwrap();
            let below = degrees.iter().filter(|&&x| (x as u64) < d).count();
            assert!(
                integer(below as u64) <= bound,
                "d={d} delta={delta} below={below} bound={bound}"
            );
        }
    }
}

fn arb_multi() -> impl Strategy<Value = MultiHypergraph> {
    (2usize..7, 1usize..8).prop_flat_map(|(n, m)| {
        prop::collection::vec(prop::collection::btree_set(0..n, 1..=n.min(4)), m).prop_map(
            move |edges| {
                MultiHypergraph::new(n, edges.into_iter().map(|e| e.into_iter().collect()).collect())
                    .unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn max_sdr_matches_brute_force(m in arb_multi()) {
        let (size, w) = max_sdr(&m);
        prop_assert_eq!(size, brute_force_sdr(&m));
        prop_assert_eq!(w.pairs.len(), size);
        prop_assert!(verify_sdr(&m, &w).is_ok());
    }

    #[test]
    fn detection_is_input_order_invariant(seed in any::<u64>()) {
        // normal form makes detector answers independent of edge insert order
        let h = berge_forest_small_r(8, 2, 2, 3).unwrap().hypergraph;
        let mut edges: Vec<Vec<usize>> = h.edges().to_vec();
        let mut state = seed | 1;
        for i in (1..edges.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            edges.swap(i, j);
        }
        let reshuffled = Hypergraph::new(h.n(), h.r(), edges).unwrap();
        prop_assert_eq!(&reshuffled, &h);
        let a = find_berge_star_forest(&h, 2, 2, budget());
        let b = find_berge_star_forest(&reshuffled, 2, 2, budget());
        prop_assert_eq!(a, b);
    }
}
