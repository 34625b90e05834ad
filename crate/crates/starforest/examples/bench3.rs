use starforest::constructions::*;
use starforest::detect::{find_expansion_star_forest, find_berge_star_forest, SearchBudget, Detection};
use starforest::hypercore::Hypergraph;
use std::time::Instant;

fn tag<T>(d: &Detection<T>) -> &'static str {
    match d {
        Detection::Exhausted => "exhausted",
        Detection::Witness(_) => "WITNESS",
        Detection::Inconclusive => "INCONCLUSIVE",
    }
}

fn main() {
    for (n, k, r) in [(20usize, 4usize, 5usize), (20, 4, 3), (20, 2, 3), (20, 3, 4)] {
        let base = Hypergraph::empty(n - k + 1, r);
        let c = apex_extremal_expansion(n, k, r, &base).unwrap();
        for l in 1..=5 {
            let t = Instant::now();
            let d = find_expansion_star_forest(&c.hypergraph, k, l, SearchBudget::default());
            println!("apex n={n} k={k} r={r} ({}e) l={l}: {} in {:?}", c.hypergraph.edge_count(), tag(&d), t.elapsed());
        }
    }
    // linear star forest instances at <= 20 vertices
    for (n, k, l, r) in [(19usize, 2usize, 2usize, 3usize), (13, 2, 2, 4), (14, 3, 2, 3), (19, 3, 2, 2), (17, 2, 4, 2), (9, 1, 3, 3)] {
        let c = linear_star_forest_extremal(n, k, l, r).unwrap();
        let t = Instant::now();
        let d = find_expansion_star_forest(&c.hypergraph, k, l, SearchBudget::default());
        println!("lsf n={n} k={k} l={l} r={r} ({}e): {} in {:?}", c.hypergraph.edge_count(), tag(&d), t.elapsed());
    }
    // berge forests at n = 20
    for (n, k, l, r) in [(20usize, 4usize, 5usize, 3usize), (20, 4, 2, 3), (18, 3, 4, 4), (20, 2, 5, 3)] {
        let c = berge_forest_small_r(n, k, l, r).unwrap();
        let t = Instant::now();
        let d = find_berge_star_forest(&c.hypergraph, k, l, SearchBudget::default());
        println!("small_r n={n} k={k} l={l} r={r} ({}e): {} in {:?}", c.hypergraph.edge_count(), tag(&d), t.elapsed());
    }
    // llp graphs
    for (n, k, l) in [(20usize, 4usize, 5usize), (20, 2, 2), (20, 3, 4)] {
        let c = llp_extremal_graph(n, k, l).unwrap();
        let t = Instant::now();
        let d = find_berge_star_forest(&c.hypergraph, k, l, SearchBudget::default());
        println!("llp n={n} k={k} l={l} ({}e): {} in {:?}", c.hypergraph.edge_count(), tag(&d), t.elapsed());
    }
}
