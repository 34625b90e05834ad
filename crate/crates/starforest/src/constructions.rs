//! Extremal and lower-bound constructions.
//!
//! Each theorem-level construction returns a [`LabeledConstruction`]: the
//! hypergraph itself, a partition of the vertices into named roles (apex set
//! `A`, classes, copies), and the predicted edge count as an exact rational
//! that is checked against the built hypergraph. Building blocks (complete
//! hypergraphs, stars, expansions, lattices, products, circular regular
//! hypergraphs) are exposed on their own.

use crate::formulas::{binomial, construction_count_small_r, integer, ratio, Rational};
use crate::hypercore::{
    ColoredHypergraph, ColoredMultiHypergraph, CoreError, Graph, Hypergraph, MultiHypergraph,
};
use itertools::Itertools;
use num_traits::ToPrimitive;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use thiserror::Error;

/// Guard on vertex counts for the exponential-size families.
pub const SIZE_LIMIT: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("divisibility violated: {0}")]
    Divisibility(String),
    #[error("construction exceeds the size limit of {SIZE_LIMIT} vertices")]
    TooLarge,
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("predicted {predicted} edges but built {actual}")]
    PredictionMismatch { predicted: Rational, actual: usize },
    #[error("labels do not partition the vertex set")]
    BadLabels,
}

/// Construction output: hypergraph, role labels partitioning the vertices,
/// and the parameter record with the exact predicted edge count.
#[derive(Debug, Clone)]
pub struct LabeledConstruction {
    pub hypergraph: Hypergraph,
    pub labels: BTreeMap<String, Vec<usize>>,
    pub meta: ConstructionMeta,
}

#[derive(Debug, Clone)]
pub struct ConstructionMeta {
    pub name: &'static str,
    pub params: Vec<(&'static str, u64)>,
    pub predicted_edges: Rational,
}

impl LabeledConstruction {
    fn assemble(
        hypergraph: Hypergraph,
        labels: BTreeMap<String, Vec<usize>>,
        meta: ConstructionMeta,
    ) -> Result<Self, ConstructError> {
        let mut covered: Vec<usize> = labels.values().flatten().copied().collect();
        covered.sort_unstable();
        if covered != (0..hypergraph.n()).collect::<Vec<_>>() {
            return Err(ConstructError::BadLabels);
        }
        if meta.predicted_edges != integer(hypergraph.edge_count() as u64) {
            return Err(ConstructError::PredictionMismatch {
                predicted: meta.predicted_edges.clone(),
                actual: hypergraph.edge_count(),
            });
        }
        Ok(LabeledConstruction {
            hypergraph,
            labels,
            meta,
        })
    }

    /// Side-car label file: one `role=v1 v2 ...` line per role.
    pub fn labels_text(&self) -> String {
        let mut out = String::new();
        for (role, vs) in &self.labels {
            let _ = write!(out, "{role}=");
            for (i, v) in vs.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{v}");
            }
            out.push('\n');
        }
        out
    }
}

fn labels_from(parts: Vec<(String, Vec<usize>)>) -> BTreeMap<String, Vec<usize>> {
    parts
        .into_iter()
        .filter(|(_, vs)| !vs.is_empty())
        .collect()
}

/// All `C(m, r)` edges on `m` vertices (edgeless when `m < r`).
pub fn complete_uniform(m: usize, r: usize) -> Hypergraph {
    let edges = (0..m).combinations(r).collect();
    Hypergraph::new(m, r, edges).expect("complete hypergraph is valid")
}

/// Star with `l` edges; the center is vertex 0.
pub fn star_graph(l: usize) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..l).map(|i| (0, i + 1)).collect();
    Graph::new(l + 1, &pairs).expect("star is valid")
}

/// `k` pairwise vertex-disjoint copies.
pub fn copies(h: &Hypergraph, k: usize) -> Result<Hypergraph, ConstructError> {
    if k < 1 {
        return Err(ConstructError::InvalidParams("need k >= 1 copies".into()));
    }
    let mut out = h.clone();
    for _ in 1..k {
        out = out.disjoint_union(h)?;
    }
    Ok(out)
}

pub fn copies_graph(g: &Graph, k: usize) -> Result<Graph, ConstructError> {
    Ok(Graph::from_hypergraph(copies(g.as_hypergraph(), k)?)?)
}

/// Expansion of a graph: `r - 2` fresh vertices are appended to each edge.
/// For `r = 2` this is the graph itself.
pub fn expansion(f: &Graph, r: usize) -> Result<Hypergraph, ConstructError> {
    if r < 2 {
        return Err(ConstructError::InvalidParams("need r >= 2".into()));
    }
    if r == 2 {
        return Ok(f.as_hypergraph().clone());
    }
    let n = f.n();
    let fresh_per_edge = r - 2;
    let total = n + fresh_per_edge * f.edge_count();
    let edges = f
        .pairs()
        .enumerate()
        .map(|(i, (u, v))| {
            let mut e = vec![u, v];
            e.extend(n + i * fresh_per_edge..n + (i + 1) * fresh_per_edge);
            e
        })
        .collect();
    Ok(Hypergraph::new(total, r, edges)?)
}

/// `d` rotated interval partitions of `n` vertices around a circle, offsets
/// `0..d`; the union is `d`-regular and r-uniform with `d * n / r` edges.
pub fn circle_regular(n: usize, r: usize, d: usize) -> Result<Hypergraph, ConstructError> {
    if r < 1 || n <= r {
        return Err(ConstructError::InvalidParams(format!(
            "need n > r >= 1, got n={n} r={r}"
        )));
    }
    if n % r != 0 {
        return Err(ConstructError::Divisibility(format!("need r | n, got n={n} r={r}")));
    }
    if d >= r {
        return Err(ConstructError::InvalidParams(format!("need d < r, got d={d} r={r}")));
    }
    let mut edges = Vec::with_capacity(d * n / r);
    for offset in 0..d {
        for class in 0..n / r {
            edges.push((0..r).map(|t| (offset + class * r + t) % n).collect());
        }
    }
    Ok(Hypergraph::new(n, r, edges)?)
}

/// Lattice hypergraph on `r^d` vertices: the d-tuples over `0..r`, with one
/// edge per axis-parallel line. Edge color = the varying coordinate, so each
/// color class is a perfect matching and the coloring is proper.
pub fn lattice(r: usize, d: usize) -> Result<ColoredHypergraph, ConstructError> {
    if r < 2 || d < 1 {
        return Err(ConstructError::InvalidParams(format!(
            "need r >= 2 and d >= 1, got r={r} d={d}"
        )));
    }
    let n = r
        .checked_pow(d as u32)
        .filter(|&n| n <= SIZE_LIMIT)
        .ok_or(ConstructError::TooLarge)?;
    let mut colored = Vec::new();
    let mut stride = 1;
    for coord in 0..d {
        for base in 0..n {
            if base / stride % r == 0 {
                let edge = (0..r).map(|j| base + j * stride).collect();
                colored.push((edge, coord));
            }
        }
        stride *= r;
    }
    Ok(ColoredHypergraph::new(n, r, colored)?)
}

/// Cartesian product: vertex set `V(H) x V(G)`, with a fiber copy of `G`'s
/// edges over each vertex of `H` and vice versa. Vertex `(u, v)` gets index
/// `u * |V(G)| + v`.
pub fn cartesian_product(
    h: &Hypergraph,
    g: &Hypergraph,
) -> Result<MultiHypergraph, ConstructError> {
    let edges = product_edges(h.n(), h.edges(), g.n(), g.edges())?;
    Ok(MultiHypergraph::new(h.n() * g.n(), edges)?)
}

/// Cartesian product where the edges inherited from `h` keep their colors;
/// the fiber copies of `g`'s edges are uncolored.
pub fn cartesian_product_colored(
    h: &ColoredHypergraph,
    g: &Hypergraph,
) -> Result<ColoredMultiHypergraph, ConstructError> {
    let hn = h.hypergraph().n();
    let gn = g.n();
    check_product_size(hn, gn)?;
    let mut colored: Vec<(Vec<usize>, Option<usize>)> = Vec::new();
    for u in 0..hn {
        for e in g.edges() {
            colored.push((e.iter().map(|&w| u * gn + w).collect(), None));
        }
    }
    for v in 0..gn {
        for (i, f) in h.hypergraph().edges().iter().enumerate() {
            colored.push((f.iter().map(|&w| w * gn + v).collect(), Some(h.color(i))));
        }
    }
    Ok(ColoredMultiHypergraph::new(hn * gn, colored)?)
}

fn check_product_size(hn: usize, gn: usize) -> Result<(), ConstructError> {
    match hn.checked_mul(gn) {
        Some(n) if n <= SIZE_LIMIT => Ok(()),
        _ => Err(ConstructError::TooLarge),
    }
}

fn product_edges(
    hn: usize,
    h_edges: &[Vec<usize>],
    gn: usize,
    g_edges: &[Vec<usize>],
) -> Result<Vec<Vec<usize>>, ConstructError> {
    check_product_size(hn, gn)?;
    let mut edges = Vec::with_capacity(hn * g_edges.len() + gn * h_edges.len());
    for u in 0..hn {
        for e in g_edges {
            edges.push(e.iter().map(|&w| u * gn + w).collect());
        }
    }
    for v in 0..gn {
        for f in h_edges {
            edges.push(f.iter().map(|&w| w * gn + v).collect());
        }
    }
    Ok(edges)
}

/// Apex construction: `k - 1` apex vertices joined to every r-set meeting
/// them, on top of a caller-supplied base hypergraph on the remaining
/// `n - k + 1` vertices. The caller certifies the base avoids the expanded
/// star; the result has `C(n,r) - C(n-k+1,r) + |E(base)|` edges.
pub fn apex_extremal_expansion(
    n: usize,
    k: usize,
    r: usize,
    base: &Hypergraph,
) -> Result<LabeledConstruction, ConstructError> {
    if k < 1 || r < 2 || n < r || n + 1 < k {
        return Err(ConstructError::InvalidParams(format!(
            "need k >= 1, r >= 2, n >= r, got n={n} k={k} r={r}"
        )));
    }
    if base.n() != n - k + 1 {
        return Err(ConstructError::InvalidParams(format!(
            "base must have n-k+1 = {} vertices, got {}",
            n - k + 1,
            base.n()
        )));
    }
    if base.r() != r {
        return Err(ConstructError::InvalidParams(format!(
            "base uniformity {} but building r = {r}",
            base.r()
        )));
    }
    let apexes = k - 1;
    let mut edges: Vec<Vec<usize>> = (0..n)
        .combinations(r)
        .filter(|e| e[0] < apexes)
        .collect();
    for e in base.edges() {
        edges.push(e.iter().map(|&v| v + apexes).collect());
    }
    let hypergraph = Hypergraph::new(n, r, edges)?;
    let predicted = integer(binomial(n as u64, r as u64) - binomial((n - k + 1) as u64, r as u64))
        + integer(base.edge_count() as u64);
    let labels = labels_from(vec![
        ("A".into(), (0..apexes).collect()),
        ("B".into(), (apexes..n).collect()),
    ]);
    LabeledConstruction::assemble(
        hypergraph,
        labels,
        ConstructionMeta {
            name: "apex_extremal_expansion",
            params: vec![("n", n as u64), ("k", k as u64), ("r", r as u64)],
            predicted_edges: predicted,
        },
    )
}

/// Linear host construction: `k - 1` apexes and `B` tiled by copies of the
/// product of a `(r-1)`-uniform lattice (one coordinate per apex) with an
/// `r`-uniform lattice. Full-size edges stay inside `B`; each smaller edge
/// of color `i` is completed with apex `a_i`. Requires `n - k + 1` divisible
/// by `(r-1)^(k-1) * r^(l-1)`.
pub fn linear_star_forest_extremal(
    n: usize,
    k: usize,
    l: usize,
    r: usize,
) -> Result<LabeledConstruction, ConstructError> {
    if r < 2 || k < 1 || l < 1 || n < k {
        return Err(ConstructError::InvalidParams(format!(
            "need r >= 2, k, l >= 1, n >= k, got n={n} k={k} l={l} r={r}"
        )));
    }
    let m = n - k + 1;
    let width = (r - 1)
        .checked_pow((k - 1) as u32)
        .and_then(|a| a.checked_mul(r.checked_pow((l - 1) as u32)?))
        .filter(|&w| w <= SIZE_LIMIT)
        .ok_or(ConstructError::TooLarge)?;
    if m % width != 0 {
        return Err(ConstructError::Divisibility(format!(
            "need (r-1)^(k-1) * r^(l-1) = {width} to divide n-k+1 = {m}"
        )));
    }
    let apexes = k - 1;
    let q = m / width;
    let copy_edges = copy_edge_patterns(k, l, r)?;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut labels: Vec<(String, Vec<usize>)> =
        vec![("A".to_string(), (0..apexes).collect())];
    for c in 0..q {
        let base = apexes + c * width;
        labels.push((format!("copy_{c}"), (base..base + width).collect()));
        for (pattern, color) in &copy_edges {
            let mut e: Vec<usize> = pattern.iter().map(|&p| base + p).collect();
            if let Some(i) = color {
                e.push(*i);
            }
            edges.push(e);
        }
    }
    let hypergraph = Hypergraph::new(n, r, edges)?;
    let predicted = (ratio(l as u64 - 1, r as u64) + ratio(k as u64 - 1, r as u64 - 1))
        * integer(m as u64);
    LabeledConstruction::assemble(
        hypergraph,
        labels_from(labels),
        ConstructionMeta {
            name: "linear_star_forest_extremal",
            params: vec![
                ("n", n as u64),
                ("k", k as u64),
                ("l", l as u64),
                ("r", r as u64),
            ],
            predicted_edges: predicted,
        },
    )
}

/// Edge patterns of one tile: vertex indices local to the tile plus, for the
/// smaller edges, the apex index that completes them.
fn copy_edge_patterns(
    k: usize,
    l: usize,
    r: usize,
) -> Result<Vec<(Vec<usize>, Option<usize>)>, ConstructError> {
    let mut patterns: Vec<(Vec<usize>, Option<usize>)> = Vec::new();
    if r == 2 {
        // the (r-1)-uniform factor degenerates to singletons of every color:
        // each tile vertex is joined to every apex
        let g_n = 2usize.pow((l - 1) as u32);
        if l >= 2 {
            let g = lattice(2, l - 1)?;
            for e in g.hypergraph().edges() {
                patterns.push((e.clone(), None));
            }
        }
        for v in 0..g_n {
            for i in 0..k - 1 {
                patterns.push((vec![v], Some(i)));
            }
        }
        return Ok(patterns);
    }
    match (k >= 2, l >= 2) {
        (false, false) => {}
        (false, true) => {
            let g = lattice(r, l - 1)?;
            for e in g.hypergraph().edges() {
                patterns.push((e.clone(), None));
            }
        }
        (true, false) => {
            let h = lattice(r - 1, k - 1)?;
            for (i, f) in h.hypergraph().edges().iter().enumerate() {
                patterns.push((f.clone(), Some(h.color(i))));
            }
        }
        (true, true) => {
            let h = lattice(r - 1, k - 1)?;
            let g = lattice(r, l - 1)?;
            let product = cartesian_product_colored(&h, g.hypergraph())?;
            for (e, color) in product.multi().edges().iter().zip(product.colors()) {
                patterns.push((e.clone(), *color));
            }
        }
    }
    Ok(patterns)
}

/// Berge star construction: for `l > r` disjoint complete hypergraphs on `l`
/// vertices (plus one smaller complete hypergraph on the remainder); for
/// `l <= r` the circular `(l-1)`-regular hypergraph. For `l = 1` the empty
/// hypergraph on `n` vertices.
pub fn berge_star_extremal(
    n: usize,
    l: usize,
    r: usize,
) -> Result<LabeledConstruction, ConstructError> {
    if l < 1 || r < 2 {
        return Err(ConstructError::InvalidParams(format!(
            "need l >= 1 and r >= 2, got l={l} r={r}"
        )));
    }
    let meta_params = vec![("n", n as u64), ("l", l as u64), ("r", r as u64)];
    if l == 1 {
        return LabeledConstruction::assemble(
            Hypergraph::empty(n, r),
            labels_from(vec![("B".into(), (0..n).collect())]),
            ConstructionMeta {
                name: "berge_star_extremal",
                params: meta_params,
                predicted_edges: integer(0),
            },
        );
    }
    if l <= r {
        let hypergraph = circle_regular(n, r, l - 1)?;
        let predicted = ratio((l as u64 - 1) * n as u64, r as u64);
        return LabeledConstruction::assemble(
            hypergraph,
            labels_from(vec![("B".into(), (0..n).collect())]),
            ConstructionMeta {
                name: "berge_star_extremal",
                params: meta_params,
                predicted_edges: predicted,
            },
        );
    }
    let q = n / l;
    let t = n % l;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut labels: Vec<(String, Vec<usize>)> = Vec::new();
    for c in 0..q {
        let base = c * l;
        labels.push((format!("clique_{c}"), (base..base + l).collect()));
        for e in (base..base + l).combinations(r) {
            edges.push(e);
        }
    }
    if t > 0 {
        labels.push(("rest".into(), (q * l..n).collect()));
        for e in (q * l..n).combinations(r) {
            edges.push(e);
        }
    }
    let hypergraph = Hypergraph::new(n, r, edges)?;
    let predicted = integer(
        binomial(l as u64, r as u64) * num_bigint::BigInt::from(q as u64)
            + binomial(t as u64, r as u64),
    );
    LabeledConstruction::assemble(
        hypergraph,
        labels_from(labels),
        ConstructionMeta {
            name: "berge_star_extremal",
            params: meta_params,
            predicted_edges: predicted,
        },
    )
}

/// Large-uniformity Berge forest construction (`r >= l+k-1`): an
/// `(l-1)`-regular `(r-k+1)`-uniform hypergraph on `B`, with a fixed set of
/// `k - 1` apexes added to every edge.
pub fn berge_forest_large_r(
    n: usize,
    k: usize,
    l: usize,
    r: usize,
) -> Result<LabeledConstruction, ConstructError> {
    if k < 1 || l < 1 || r < 2 || n < k {
        return Err(ConstructError::InvalidParams(format!(
            "need k, l >= 1, r >= 2, n >= k, got n={n} k={k} l={l} r={r}"
        )));
    }
    if r + 1 < l + k {
        return Err(ConstructError::InvalidParams(format!(
            "needs r >= l+k-1, got k={k} l={l} r={r}"
        )));
    }
    let apexes = k - 1;
    let m = n - apexes;
    let inner = circle_regular(m, r - apexes, l - 1)?;
    let edges = inner
        .edges()
        .iter()
        .map(|e| {
            let mut full: Vec<usize> = (0..apexes).collect();
            full.extend(e.iter().map(|&v| v + apexes));
            full
        })
        .collect();
    let hypergraph = Hypergraph::new(n, r, edges)?;
    let predicted = ratio((l as u64 - 1) * m as u64, (r - apexes) as u64);
    LabeledConstruction::assemble(
        hypergraph,
        labels_from(vec![
            ("A".into(), (0..apexes).collect()),
            ("B".into(), (apexes..n).collect()),
        ]),
        ConstructionMeta {
            name: "berge_forest_large_r",
            params: vec![
                ("n", n as u64),
                ("k", k as u64),
                ("l", l as u64),
                ("r", r as u64),
            ],
            predicted_edges: predicted,
        },
    )
}

/// Small-uniformity Berge forest construction (`r <= l+k-1`): partition `B`
/// into classes of size `l` (plus one remainder class) and take the complete
/// r-uniform hypergraph on the apexes together with each class, deduplicating
/// the edges lying entirely inside the apex set.
pub fn berge_forest_small_r(
    n: usize,
    k: usize,
    l: usize,
    r: usize,
) -> Result<LabeledConstruction, ConstructError> {
    if k < 1 || l < 1 || r < 1 || n < k {
        return Err(ConstructError::InvalidParams(format!(
            "need k, l >= 1, r >= 1, n >= k, got n={n} k={k} l={l} r={r}"
        )));
    }
    if r > l + k - 1 {
        return Err(ConstructError::InvalidParams(format!(
            "needs r <= l+k-1, got k={k} l={l} r={r}"
        )));
    }
    let apexes = k - 1;
    let m = n - apexes;
    let q = m / l;
    let t = m % l;
    let mut classes: Vec<(String, Vec<usize>)> = Vec::new();
    for c in 0..q {
        let base = apexes + c * l;
        classes.push((format!("class_{c}"), (base..base + l).collect()));
    }
    if t > 0 {
        classes.push(("class_rem".into(), (apexes + q * l..n).collect()));
    }
    let mut edge_set: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (_, class) in &classes {
        let mut pool: Vec<usize> = (0..apexes).collect();
        pool.extend(class);
        for e in pool.into_iter().combinations(r) {
            edge_set.insert(e);
        }
    }
    let hypergraph = Hypergraph::new(n, r, edge_set.into_iter().collect())?;
    let predicted = integer(
        construction_count_small_r(n as u64, k as u64, l as u64, r as u64)
            .map_err(|e| ConstructError::InvalidParams(e.to_string()))?,
    );
    let mut labels = vec![("A".to_string(), (0..apexes).collect::<Vec<_>>())];
    labels.extend(classes);
    LabeledConstruction::assemble(
        hypergraph,
        labels_from(labels),
        ConstructionMeta {
            name: "berge_forest_small_r",
            params: vec![
                ("n", n as u64),
                ("k", k as u64),
                ("l", l as u64),
                ("r", r as u64),
            ],
            predicted_edges: predicted,
        },
    )
}

/// Graph construction matching the star-forest bound: a clique on `k - 1`
/// apexes joined completely to `B`, plus a maximum `(l-1)`-quasi-regular
/// graph on `B` contributing `floor((l-1)(n-k+1)/2)` edges.
pub fn llp_extremal_graph(
    n: usize,
    k: usize,
    l: usize,
) -> Result<LabeledConstruction, ConstructError> {
    if k < 1 || l < 1 || n < k + l {
        return Err(ConstructError::InvalidParams(format!(
            "need k, l >= 1 and n >= k + l, got n={n} k={k} l={l}"
        )));
    }
    let apexes = k - 1;
    let m = n - apexes;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for pair in (0..apexes).combinations(2) {
        edges.push(pair);
    }
    for a in 0..apexes {
        for b in apexes..n {
            edges.push(vec![a, b]);
        }
    }
    for (u, v) in quasi_regular_pairs(m, l - 1) {
        edges.push(vec![apexes + u, apexes + v]);
    }
    let hypergraph = Hypergraph::new(n, 2, edges)?;
    let m_rat = integer(m as u64);
    let predicted = (ratio(l as u64 - 1, 2) * &m_rat).floor()
        + integer(apexes as u64) * &m_rat
        + integer(binomial(apexes as u64, 2));
    LabeledConstruction::assemble(
        hypergraph,
        labels_from(vec![
            ("A".into(), (0..apexes).collect()),
            ("B".into(), (apexes..n).collect()),
        ]),
        ConstructionMeta {
            name: "llp_extremal_graph",
            params: vec![("n", n as u64), ("k", k as u64), ("l", l as u64)],
            predicted_edges: predicted,
        },
    )
}

/// Circulant graph on `m` vertices with `floor(d * m / 2)` edges where every
/// vertex has degree `d` except, when `d * m` is odd, one vertex of degree
/// `d - 1`. Chords `1..=d/2`, completed for odd `d` by a (near-)perfect
/// matching along a longer chord.
fn quasi_regular_pairs(m: usize, d: usize) -> Vec<(usize, usize)> {
    assert!(d + 2 <= m || d == 0, "need d <= m - 2");
    let mut pairs = Vec::new();
    for j in 1..=d / 2 {
        for i in 0..m {
            let other = (i + j) % m;
            if i < other {
                pairs.push((i, other));
            } else {
                pairs.push((other, i));
            }
        }
    }
    if d % 2 == 1 {
        if m % 2 == 0 {
            for i in 0..m / 2 {
                pairs.push((i, i + m / 2));
            }
        } else {
            let chord = (m - 1) / 2;
            for i in 0..(m - 1) / 2 {
                pairs.push((i, i + chord));
            }
        }
    }
    pairs
}

/// Exact count convenience used by tests and the verification harness.
pub fn predicted_as_u64(c: &LabeledConstruction) -> u64 {
    c.meta
        .predicted_edges
        .to_integer()
        .to_u64()
        .expect("edge counts fit u64")
}

#[cfg(test)]
mod tests;
