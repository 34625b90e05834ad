//! Core hypergraph data model.
//!
//! Vertices are dense integers `0..n`. Simple uniform hypergraphs keep every
//! edge as a strictly increasing vertex list and the edge list itself in
//! lexicographic order; this normal form is the external contract everywhere
//! (serialization, canonical forms, witnesses). All values are immutable
//! after construction and safe to share across threads.

mod canon;
mod format;

pub use canon::{canonical_form, canonical_form_with_limit, DEFAULT_CANON_LIMIT};
pub(crate) use canon::is_canonical;
pub use format::{
    parse_hypergraph, parse_multi_hypergraph, write_hypergraph, write_multi_hypergraph,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge #{index} has {got} vertices, expected {expected}")]
    WrongEdgeSize {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("edge #{index} contains a repeated vertex")]
    RepeatedVertex { index: usize },
    #[error("duplicate edge at position {index}")]
    DuplicateEdge { index: usize },
    #[error("edge #{index} is empty")]
    EmptyEdge { index: usize },
    #[error("uniformity mismatch: {left} vs {right}")]
    UniformityMismatch { left: usize, right: usize },
    #[error("n = {n} exceeds the canonical-form size limit {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
    #[error("edges #{first} and #{second} share color {color} but are not disjoint")]
    ImproperColoring {
        first: usize,
        second: usize,
        color: usize,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Simple `r`-uniform hypergraph on vertices `0..n` in normal form: every
/// edge strictly increasing, no two edges equal, edge list lexicographically
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph from an arbitrary edge list, normalizing order.
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self, CoreError> {
        let mut edges = edges;
        for (index, edge) in edges.iter_mut().enumerate() {
            edge.sort_unstable();
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(CoreError::RepeatedVertex { index });
            }
            if edge.len() != r {
                return Err(CoreError::WrongEdgeSize {
                    index,
                    got: edge.len(),
                    expected: r,
                });
            }
            if let Some(&v) = edge.last() {
                if v >= n {
                    return Err(CoreError::VertexOutOfRange { vertex: v, n });
                }
            }
        }
        edges.sort_unstable();
        for index in 1..edges.len() {
            if edges[index - 1] == edges[index] {
                return Err(CoreError::DuplicateEdge { index });
            }
        }
        Ok(Hypergraph { n, r, edges })
    }

    /// Edgeless hypergraph on `n` vertices.
    pub fn empty(n: usize, r: usize) -> Self {
        Hypergraph {
            n,
            r,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize, CoreError> {
        if v >= self.n {
            return Err(CoreError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count())
    }

    /// Degree of every vertex in one pass.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Distinct vertices sharing at least one edge with `v`, ascending.
    pub fn neighborhood(&self, v: usize) -> Result<Vec<usize>, CoreError> {
        if v >= self.n {
            return Err(CoreError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut seen = vec![false; self.n];
        for e in &self.edges {
            if e.binary_search(&v).is_ok() {
                for &u in e {
                    if u != v {
                        seen[u] = true;
                    }
                }
            }
        }
        Ok((0..self.n).filter(|&u| seen[u]).collect())
    }

    /// Link hypergraph at `x`: the traces `e - x` of edges containing `x`.
    /// The vertex universe is unchanged; `x` becomes isolated.
    pub fn link(&self, x: usize) -> Result<MultiHypergraph, CoreError> {
        if x >= self.n {
            return Err(CoreError::VertexOutOfRange { vertex: x, n: self.n });
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.binary_search(&x).is_ok())
            .map(|e| e.iter().copied().filter(|&u| u != x).collect())
            .collect();
        MultiHypergraph::new(self.n, edges)
    }

    /// True iff every pair of edges shares at most one vertex.
    pub fn is_linear(&self) -> bool {
        pairs_linear(self.n, self.edges.iter().map(|e| e.as_slice()))
    }

    /// Disjoint union: vertices of `other` are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph, CoreError> {
        if self.r != other.r {
            return Err(CoreError::UniformityMismatch {
                left: self.r,
                right: other.r,
            });
        }
        let mut edges = self.edges.clone();
        for e in &other.edges {
            edges.push(e.iter().map(|&v| v + self.n).collect());
        }
        Hypergraph::new(self.n + other.n, self.r, edges)
    }

    /// Edge bitmasks; requires `n <= 64`.
    pub(crate) fn edge_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask representation needs n <= 64");
        self.edges
            .iter()
            .map(|e| e.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect()
    }

    pub(crate) fn from_masks(n: usize, r: usize, masks: &[u64]) -> Hypergraph {
        let edges = masks
            .iter()
            .map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
            .collect();
        Hypergraph::new(n, r, edges).expect("masks form a valid hypergraph")
    }
}

/// Hypergraph with repeatable edges of arbitrary (nonempty) sizes, kept
/// sorted. Holds links and mixed-uniformity Cartesian products.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiHypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl MultiHypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, CoreError> {
        let mut edges = edges;
        for (index, edge) in edges.iter_mut().enumerate() {
            edge.sort_unstable();
            if edge.is_empty() {
                return Err(CoreError::EmptyEdge { index });
            }
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(CoreError::RepeatedVertex { index });
            }
            if let Some(&v) = edge.last() {
                if v >= n {
                    return Err(CoreError::VertexOutOfRange { vertex: v, n });
                }
            }
        }
        edges.sort_unstable();
        Ok(MultiHypergraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        MultiHypergraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of edges containing `v`, with multiplicity.
    pub fn degree(&self, v: usize) -> Result<usize, CoreError> {
        if v >= self.n {
            return Err(CoreError::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count())
    }
}

/// Simple graph: a thin wrapper enforcing uniformity 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph(Hypergraph);

impl Graph {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, CoreError> {
        let edges = pairs.iter().map(|&(u, v)| vec![u, v]).collect();
        Ok(Graph(Hypergraph::new(n, 2, edges)?))
    }

    pub fn empty(n: usize) -> Self {
        Graph(Hypergraph::empty(n, 2))
    }

    pub fn from_hypergraph(h: Hypergraph) -> Result<Self, CoreError> {
        if h.r() != 2 {
            return Err(CoreError::UniformityMismatch { left: h.r(), right: 2 });
        }
        Ok(Graph(h))
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.edges().iter().map(|e| (e[0], e[1]))
    }

    pub fn degree(&self, v: usize) -> Result<usize, CoreError> {
        self.0.degree(v)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, CoreError> {
        Ok(Graph(self.0.disjoint_union(&other.0)?))
    }
}

/// Uniform hypergraph with a proper edge coloring: two edges of the same
/// color are vertex-disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredHypergraph {
    hypergraph: Hypergraph,
    colors: Vec<usize>,
}

impl ColoredHypergraph {
    /// Builds from `(edge, color)` pairs; the pairs are normalized together
    /// so colors stay attached to their edges.
    pub fn new(
        n: usize,
        r: usize,
        colored_edges: Vec<(Vec<usize>, usize)>,
    ) -> Result<Self, CoreError> {
        let mut colored = colored_edges;
        for (edge, _) in colored.iter_mut() {
            edge.sort_unstable();
        }
        colored.sort_unstable();
        let (edges, colors): (Vec<_>, Vec<_>) = colored.into_iter().unzip();
        let hypergraph = Hypergraph::new(n, r, edges)?;
        check_proper(&hypergraph.edges, &colors)?;
        Ok(ColoredHypergraph { hypergraph, colors })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.hypergraph
    }

    /// Color of the edge at `index`.
    pub fn color(&self, index: usize) -> usize {
        self.colors[index]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Edge indices grouped by color, ascending.
    pub fn color_classes(&self) -> Vec<(usize, Vec<usize>)> {
        let mut classes: Vec<(usize, Vec<usize>)> = Vec::new();
        for (i, &c) in self.colors.iter().enumerate() {
            match classes.binary_search_by_key(&c, |(color, _)| *color) {
                Ok(pos) => classes[pos].1.push(i),
                Err(pos) => classes.insert(pos, (c, vec![i])),
            }
        }
        classes
    }
}

/// Mixed-size multi-hypergraph where a subset of the edges carries a proper
/// coloring (Cartesian products inherit colors on one side only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredMultiHypergraph {
    multi: MultiHypergraph,
    colors: Vec<Option<usize>>,
}

impl ColoredMultiHypergraph {
    pub fn new(
        n: usize,
        colored_edges: Vec<(Vec<usize>, Option<usize>)>,
    ) -> Result<Self, CoreError> {
        let mut colored = colored_edges;
        for (edge, _) in colored.iter_mut() {
            edge.sort_unstable();
        }
        colored.sort_unstable();
        let (edges, colors): (Vec<_>, Vec<_>) = colored.into_iter().unzip();
        let multi = MultiHypergraph::new(n, edges)?;
        check_proper_options(&multi.edges, &colors)?;
        Ok(ColoredMultiHypergraph { multi, colors })
    }

    pub fn multi(&self) -> &MultiHypergraph {
        &self.multi
    }

    pub fn colors(&self) -> &[Option<usize>] {
        &self.colors
    }

    /// Colored edges only, as `(edge, color)` pairs.
    pub fn colored_edges(&self) -> impl Iterator<Item = (&[usize], usize)> + '_ {
        self.multi
            .edges
            .iter()
            .zip(&self.colors)
            .filter_map(|(e, c)| c.map(|c| (e.as_slice(), c)))
    }
}

fn check_proper(edges: &[Vec<usize>], colors: &[usize]) -> Result<(), CoreError> {
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if colors[i] == colors[j] && !disjoint(&edges[i], &edges[j]) {
                return Err(CoreError::ImproperColoring {
                    first: i,
                    second: j,
                    color: colors[i],
                });
            }
        }
    }
    Ok(())
}

fn check_proper_options(edges: &[Vec<usize>], colors: &[Option<usize>]) -> Result<(), CoreError> {
    for i in 0..edges.len() {
        let Some(ci) = colors[i] else { continue };
        for j in i + 1..edges.len() {
            if colors[j] == Some(ci) && !disjoint(&edges[i], &edges[j]) {
                return Err(CoreError::ImproperColoring {
                    first: i,
                    second: j,
                    color: ci,
                });
            }
        }
    }
    Ok(())
}

fn disjoint(a: &[usize], b: &[usize]) -> bool {
    intersection_size(a, b) == 0
}

/// Size of the intersection of two sorted vertex lists.
pub(crate) fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Linearity over an arbitrary edge iterator: every vertex pair is covered
/// at most once.
fn pairs_linear<'a>(n: usize, edges: impl Iterator<Item = &'a [usize]>) -> bool {
    let mut seen = vec![false; n * n];
    for e in edges {
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                let slot = e[i] * n + e[j];
                if seen[slot] {
                    return false;
                }
                seen[slot] = true;
            }
        }
    }
    true
}

impl MultiHypergraph {
    /// True iff every pair of edges (counting multiplicity) shares at most
    /// one vertex. Any repeated edge of size >= 2 fails.
    pub fn is_linear(&self) -> bool {
        let mut seen = vec![0u8; self.n * self.n];
        for e in &self.edges {
            for i in 0..e.len() {
                for j in i + 1..e.len() {
                    let slot = e[i] * self.n + e[j];
                    if seen[slot] > 0 {
                        return false;
                    }
                    seen[slot] = 1;
                }
            }
        }
        true
    }
}
