//! Certificate-producing detectors for the forbidden configurations.
//!
//! Every search either returns a checkable witness, an exhaustive
//! `Exhausted` (the configuration provably does not occur), or
//! `Inconclusive` when the work budget ran out. A budget overrun is never
//! reported as absence. Witnesses are verified independently by the
//! `verify_*` functions, which re-check every invariant directly against
//! the hypergraph.

mod flow;

use crate::formulas::{integer, ratio, Rational};
use crate::hypercore::{Hypergraph, MultiHypergraph};
use flow::FlowNet;
use itertools::Itertools;
use serde::Serialize;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("pattern requires uniformity 2, hypergraph has {0}")]
    WrongUniformity(usize),
}

/// Work cap for the backtracking searches; exceeding it yields
/// [`Detection::Inconclusive`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_cap: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_cap: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Detection<T> {
    Witness(T),
    /// The whole search space was covered; the pattern is absent.
    Exhausted,
    /// The budget ran out before the search space was covered.
    Inconclusive,
}

impl<T> Detection<T> {
    pub fn witness(self) -> Option<T> {
        match self {
            Detection::Witness(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, Detection::Exhausted)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Detection<U> {
        match self {
            Detection::Witness(w) => Detection::Witness(f(w)),
            Detection::Exhausted => Detection::Exhausted,
            Detection::Inconclusive => Detection::Inconclusive,
        }
    }
}

/// System of distinct representatives: distinct edges paired with distinct
/// vertices, one contained in each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SdrWitness {
    /// `(edge index, representative vertex)` pairs.
    pub pairs: Vec<(usize, usize)>,
}

/// One Berge star: a star skeleton embedded on the hypergraph's vertices
/// plus an injective assignment of skeleton edges to hyperedges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BergeWitness {
    pub center: usize,
    /// Skeleton edges as normalized vertex pairs, parallel to `hyperedges`.
    pub skeleton: Vec<(usize, usize)>,
    pub hyperedges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionStar {
    pub center: usize,
    pub hyperedges: Vec<usize>,
}

/// One or more expanded stars with pairwise disjoint vertex spans.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionWitness {
    pub stars: Vec<ExpansionStar>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum PatternWitness {
    Berge(Vec<BergeWitness>),
    Expansion(ExpansionWitness),
}

/// Forbidden pattern identifier with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    BergeStarForest { k: usize, l: usize },
    ExpansionStarForest { k: usize, l: usize },
    Matching { k: usize },
    GraphStarForest { k: usize, l: usize },
}

impl Pattern {
    pub fn name(&self) -> &'static str {
        match self {
            Pattern::BergeStarForest { .. } => "berge-star-forest",
            Pattern::ExpansionStarForest { .. } => "expansion-star-forest",
            Pattern::Matching { .. } => "matching",
            Pattern::GraphStarForest { .. } => "graph-star-forest",
        }
    }

    /// Runs the matching detector for this pattern.
    pub fn detect(
        &self,
        h: &Hypergraph,
        budget: SearchBudget,
    ) -> Result<Detection<PatternWitness>, DetectError> {
        match *self {
            Pattern::BergeStarForest { k, l } => {
                Ok(find_berge_star_forest(h, k, l, budget).map(PatternWitness::Berge))
            }
            Pattern::GraphStarForest { k, l } => {
                if h.r() != 2 {
                    return Err(DetectError::WrongUniformity(h.r()));
                }
                Ok(find_berge_star_forest(h, k, l, budget).map(PatternWitness::Berge))
            }
            Pattern::ExpansionStarForest { k, l } => {
                Ok(find_expansion_star_forest(h, k, l, budget).map(PatternWitness::Expansion))
            }
            Pattern::Matching { k } => {
                Ok(find_matching(h, k, budget).map(PatternWitness::Expansion))
            }
        }
    }
}

struct Work {
    left: u64,
    exhausted: bool,
}

impl Work {
    fn new(budget: SearchBudget) -> Self {
        Work {
            left: budget.node_cap,
            exhausted: false,
        }
    }

    /// False once the budget is gone.
    fn tick(&mut self) -> bool {
        if self.left == 0 {
            self.exhausted = true;
            return false;
        }
        self.left -= 1;
        true
    }
}

/// Maximum system of distinct representatives via augmenting paths on the
/// edge-vertex incidence graph. Deterministic: edges are processed in
/// stored order, vertices ascending.
pub fn max_sdr(m: &MultiHypergraph) -> (usize, SdrWitness) {
    let mut rep_edge: Vec<Option<usize>> = vec![None; m.n()];
    let mut size = 0;
    for start in 0..m.edge_count() {
        let mut seen = vec![false; m.n()];
        if augment(m.edges(), start, &mut seen, &mut rep_edge) {
            size += 1;
        }
    }
    let mut pairs: Vec<(usize, usize)> = rep_edge
        .iter()
        .enumerate()
        .filter_map(|(v, e)| e.map(|e| (e, v)))
        .collect();
    pairs.sort_unstable();
    (size, SdrWitness { pairs })
}

fn augment(
    edges: &[Vec<usize>],
    edge: usize,
    seen: &mut [bool],
    rep_edge: &mut [Option<usize>],
) -> bool {
    for &v in &edges[edge] {
        if !seen[v] {
            seen[v] = true;
            if rep_edge[v].is_none() || augment(edges, rep_edge[v].unwrap(), seen, rep_edge) {
                rep_edge[v] = Some(edge);
                return true;
            }
        }
    }
    false
}

/// Candidate centers ordered by decreasing degree (ties by index).
fn centers_by_degree(degrees: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..degrees.len()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
    order
}

/// Berge star with `l` edges. With a fixed center, a witness exists iff the
/// link at the center has an SDR of size `l`; otherwise all centers are
/// scanned. Polynomial, so the answer is always `Witness` or `Exhausted`.
pub fn find_berge_star(
    h: &Hypergraph,
    l: usize,
    center: Option<usize>,
) -> Detection<BergeWitness> {
    assert!(l >= 1, "a star needs at least one edge");
    let degrees = h.degrees();
    let try_center = |x: usize| berge_star_at(h, l, x);
    match center {
        Some(x) => try_center(x).map_or(Detection::Exhausted, Detection::Witness),
        None => {
            for x in centers_by_degree(&degrees) {
                if degrees[x] < l {
                    break; // sorted by degree: no later center qualifies
                }
                if let Some(w) = try_center(x) {
                    return Detection::Witness(w);
                }
            }
            Detection::Exhausted
        }
    }
}

fn berge_star_at(h: &Hypergraph, l: usize, x: usize) -> Option<BergeWitness> {
    let incident: Vec<usize> = (0..h.edge_count())
        .filter(|&i| h.edges()[i].binary_search(&x).is_ok())
        .collect();
    if incident.len() < l {
        return None;
    }
    let traces: Vec<Vec<usize>> = incident
        .iter()
        .map(|&i| h.edges()[i].iter().copied().filter(|&v| v != x).collect())
        .collect();
    let mut rep_edge: Vec<Option<usize>> = vec![None; h.n()];
    let mut matched = 0;
    for start in 0..traces.len() {
        let mut seen = vec![false; h.n()];
        if augment(&traces, start, &mut seen, &mut rep_edge) {
            matched += 1;
            if matched == l {
                break;
            }
        }
    }
    if matched < l {
        return None;
    }
    let mut pairs: Vec<(usize, usize)> = rep_edge
        .iter()
        .enumerate()
        .filter_map(|(v, e)| e.map(|e| (e, v)))
        .collect();
    pairs.sort_unstable();
    pairs.truncate(l);
    Some(BergeWitness {
        center: x,
        skeleton: pairs
            .iter()
            .map(|&(_, v)| (x.min(v), x.max(v)))
            .collect(),
        hyperedges: pairs.iter().map(|&(e, _)| incident[e]).collect(),
    })
}

/// Berge star forest: `k` stars with pairwise vertex-disjoint skeletons and
/// globally distinct hyperedges. For each candidate center set, feasibility
/// is decided exactly by a max-flow between stars, hyperedges and
/// representative vertices, so `Exhausted` means every center set failed.
pub fn find_berge_star_forest(
    h: &Hypergraph,
    k: usize,
    l: usize,
    budget: SearchBudget,
) -> Detection<Vec<BergeWitness>> {
    assert!(k >= 1 && l >= 1, "need k, l >= 1");
    let degrees = h.degrees();
    let candidates: Vec<usize> = centers_by_degree(&degrees)
        .into_iter()
        .filter(|&v| degrees[v] >= l)
        .collect();
    if candidates.len() < k {
        return Detection::Exhausted;
    }
    let mut work = Work::new(budget);
    for combo in candidates.iter().copied().combinations(k) {
        if !work.tick() {
            return Detection::Inconclusive;
        }
        if let Some(stars) = berge_forest_at(h, l, &combo) {
            return Detection::Witness(stars);
        }
    }
    Detection::Exhausted
}

fn berge_forest_at(h: &Hypergraph, l: usize, centers: &[usize]) -> Option<Vec<BergeWitness>> {
    let k = centers.len();
    let is_center = {
        let mut flags = vec![false; h.n()];
        for &c in centers {
            flags[c] = true;
        }
        flags
    };
    let incident: Vec<usize> = (0..h.edge_count())
        .filter(|&i| h.edges()[i].iter().any(|&v| is_center[v]))
        .collect();
    if incident.len() < k * l {
        return None;
    }
    let me = incident.len();
    // node layout: source, k stars, edge-in, edge-out, vertices, sink
    let source = 0;
    let star0 = 1;
    let edge_in0 = star0 + k;
    let edge_out0 = edge_in0 + me;
    let vert0 = edge_out0 + me;
    let sink = vert0 + h.n();
    let mut net = FlowNet::new(sink + 1);
    for i in 0..k {
        net.add_arc(source, star0 + i, l as i64);
    }
    let mut star_edge_arcs: Vec<(usize, usize, usize)> = Vec::new(); // (star, incident pos, arc)
    let mut rep_arcs: Vec<(usize, usize, usize)> = Vec::new(); // (incident pos, vertex, arc)
    for (j, &ei) in incident.iter().enumerate() {
        net.add_arc(edge_in0 + j, edge_out0 + j, 1);
        for (i, &c) in centers.iter().enumerate() {
            if h.edges()[ei].binary_search(&c).is_ok() {
                let arc = net.add_arc(star0 + i, edge_in0 + j, 1);
                star_edge_arcs.push((i, j, arc));
            }
        }
        for &v in &h.edges()[ei] {
            if !is_center[v] {
                let arc = net.add_arc(edge_out0 + j, vert0 + v, 1);
                rep_arcs.push((j, v, arc));
            }
        }
    }
    for v in 0..h.n() {
        if !is_center[v] {
            net.add_arc(vert0 + v, sink, 1);
        }
    }
    let target = (k * l) as i64;
    if net.max_flow(source, sink, target) < target {
        return None;
    }
    let mut edge_rep: Vec<Option<usize>> = vec![None; me];
    for &(j, v, arc) in &rep_arcs {
        if net.flow_on(arc) == 1 {
            edge_rep[j] = Some(v);
        }
    }
    let mut stars = Vec::with_capacity(k);
    for (i, &c) in centers.iter().enumerate() {
        let mut pairs: Vec<(usize, usize)> = star_edge_arcs
            .iter()
            .filter(|&&(si, _, arc)| si == i && net.flow_on(arc) == 1)
            .map(|&(_, j, _)| (incident[j], edge_rep[j].expect("saturated edge has a rep")))
            .collect();
        pairs.sort_unstable();
        stars.push(BergeWitness {
            center: c,
            skeleton: pairs.iter().map(|&(_, v)| (c.min(v), c.max(v))).collect(),
            hyperedges: pairs.iter().map(|&(e, _)| e).collect(),
        });
    }
    Some(stars)
}

/// Bitmask view for the expansion searches; needs `n <= 64`.
struct DeskView {
    masks: Vec<u64>,
    vert_edges: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl DeskView {
    fn new(h: &Hypergraph) -> Self {
        let masks = h.edge_masks();
        let mut vert_edges = vec![Vec::new(); h.n()];
        for (i, e) in h.edges().iter().enumerate() {
            for &v in e {
                vert_edges[v].push(i);
            }
        }
        DeskView {
            masks,
            degrees: h.degrees(),
            vert_edges,
        }
    }
}

/// Expanded star with `l` edges: `l` hyperedges through a common center,
/// pairwise disjoint elsewhere. Exhaustive backtracking per center.
pub fn find_expansion_star(
    h: &Hypergraph,
    l: usize,
    center: Option<usize>,
    budget: SearchBudget,
) -> Detection<ExpansionWitness> {
    assert!(l >= 1, "a star needs at least one edge");
    if h.n() > 64 {
        return Detection::Inconclusive;
    }
    let view = DeskView::new(h);
    let mut work = Work::new(budget);
    let centers: Vec<usize> = match center {
        Some(x) => vec![x],
        None => centers_by_degree(&view.degrees)
            .into_iter()
            .filter(|&v| view.degrees[v] >= l)
            .collect(),
    };
    for x in centers {
        if let Some(edges) = pack_star(&view, l, x, 1 << x, &mut work) {
            let star = ExpansionStar {
                center: x,
                hyperedges: edges,
            };
            return Detection::Witness(ExpansionWitness { stars: vec![star] });
        }
        if work.exhausted {
            return Detection::Inconclusive;
        }
    }
    Detection::Exhausted
}

/// Packs `l` edges through `x` whose traces avoid `used` and each other.
/// `used` must contain `x`'s bit; traces may not touch it.
fn pack_star(
    view: &DeskView,
    l: usize,
    x: usize,
    used: u64,
    work: &mut Work,
) -> Option<Vec<usize>> {
    let avail: Vec<usize> = view.vert_edges[x]
        .iter()
        .copied()
        .filter(|&ei| view.masks[ei] & used == 1 << x)
        .collect();
    let mut chosen = Vec::with_capacity(l);
    pack_rec(view, &avail, l, x, 0, 1 << x, &mut chosen, work).then_some(chosen)
}

/// `occupied` holds the center bit plus the traces chosen so far; a
/// candidate may share exactly the center with it.
#[allow(clippy::too_many_arguments)]
fn pack_rec(
    view: &DeskView,
    avail: &[usize],
    l: usize,
    x: usize,
    pos: usize,
    occupied: u64,
    chosen: &mut Vec<usize>,
    work: &mut Work,
) -> bool {
    if chosen.len() == l {
        return true;
    }
    if !work.tick() {
        return false;
    }
    if pos >= avail.len() || chosen.len() + (avail.len() - pos) < l {
        return false;
    }
    let ei = avail[pos];
    if view.masks[ei] & occupied == 1 << x {
        chosen.push(ei);
        if pack_rec(view, avail, l, x, pos + 1, occupied | view.masks[ei], chosen, work) {
            return true;
        }
        chosen.pop();
    }
    if work.exhausted {
        return false;
    }
    pack_rec(view, avail, l, x, pos + 1, occupied, chosen, work)
}

/// `k` expanded stars with pairwise disjoint vertex spans. For `l = 1` this
/// is a matching of `k` disjoint hyperedges.
pub fn find_expansion_star_forest(
    h: &Hypergraph,
    k: usize,
    l: usize,
    budget: SearchBudget,
) -> Detection<ExpansionWitness> {
    assert!(k >= 1 && l >= 1, "need k, l >= 1");
    if h.n() > 64 {
        return Detection::Inconclusive;
    }
    if l == 1 {
        return find_matching(h, k, budget);
    }
    let view = DeskView::new(h);
    let candidates: Vec<usize> = centers_by_degree(&view.degrees)
        .into_iter()
        .filter(|&v| view.degrees[v] >= l)
        .collect();
    if candidates.len() < k {
        return Detection::Exhausted;
    }
    let mut work = Work::new(budget);
    let mut memo: HashSet<(usize, u64)> = HashSet::new();
    for combo in candidates.iter().copied().combinations(k) {
        if !work.tick() {
            return Detection::Inconclusive;
        }
        let centers_mask = combo.iter().fold(0u64, |m, &c| m | (1 << c));
        let mut picked: Vec<Vec<usize>> = Vec::with_capacity(k);
        if forest_rec(&view, &combo, l, 0, centers_mask, &mut picked, &mut work, &mut memo) {
            let stars = combo
                .iter()
                .zip(picked)
                .map(|(&c, hyperedges)| ExpansionStar {
                    center: c,
                    hyperedges,
                })
                .collect();
            return Detection::Witness(ExpansionWitness { stars });
        }
        if work.exhausted {
            return Detection::Inconclusive;
        }
        memo.clear();
    }
    Detection::Exhausted
}

#[allow(clippy::too_many_arguments)]
fn forest_rec(
    view: &DeskView,
    centers: &[usize],
    l: usize,
    star: usize,
    used: u64,
    out: &mut Vec<Vec<usize>>,
    work: &mut Work,
    memo: &mut HashSet<(usize, u64)>,
) -> bool {
    if star == centers.len() {
        return true;
    }
    if memo.contains(&(star, used)) {
        return false;
    }
    // every remaining center still needs l usable edges
    for &c in &centers[star..] {
        let mut count = 0;
        for &ei in &view.vert_edges[c] {
            if view.masks[ei] & used == 1 << c {
                count += 1;
                if count == l {
                    break;
                }
            }
        }
        if count < l {
            if !work.exhausted && memo.len() < (1 << 20) {
                memo.insert((star, used));
            }
            return false;
        }
    }
    let c = centers[star];
    let avail: Vec<usize> = view.vert_edges[c]
        .iter()
        .copied()
        .filter(|&ei| view.masks[ei] & used == 1 << c)
        .collect();
    {
        let mut chosen = Vec::with_capacity(l);
        if forest_pack(
            view, centers, l, star, used, &avail, 0, 1 << c, &mut chosen, out, work, memo,
        ) {
            return true;
        }
    }
    if !work.exhausted && memo.len() < (1 << 20) {
        memo.insert((star, used));
    }
    false
}

/// Chooses the edges of one star (`occupied` = the center bit plus all
/// traces taken so far), then recurses into the next star.
#[allow(clippy::too_many_arguments)]
fn forest_pack(
    view: &DeskView,
    centers: &[usize],
    l: usize,
    star: usize,
    used: u64,
    avail: &[usize],
    pos: usize,
    occupied: u64,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    work: &mut Work,
    memo: &mut HashSet<(usize, u64)>,
) -> bool {
    if chosen.len() == l {
        out.push(chosen.clone());
        if forest_rec(view, centers, l, star + 1, used | occupied, out, work, memo) {
            return true;
        }
        out.pop();
        return false;
    }
    if !work.tick() {
        return false;
    }
    if pos >= avail.len() || chosen.len() + (avail.len() - pos) < l {
        return false;
    }
    let ei = avail[pos];
    // the candidate edge may share exactly the center with what this star
    // already covers
    if view.masks[ei] & occupied == 1 << centers[star] {
        chosen.push(ei);
        if forest_pack(
            view,
            centers,
            l,
            star,
            used,
            avail,
            pos + 1,
            occupied | view.masks[ei],
            chosen,
            out,
            work,
            memo,
        ) {
            return true;
        }
        chosen.pop();
    }
    if work.exhausted {
        return false;
    }
    forest_pack(
        view, centers, l, star, used, avail, pos + 1, occupied, chosen, out, work, memo,
    )
}

/// Matching of `k` pairwise disjoint hyperedges.
pub fn find_matching(h: &Hypergraph, k: usize, budget: SearchBudget) -> Detection<ExpansionWitness> {
    assert!(k >= 1, "need k >= 1");
    if h.n() > 64 {
        return Detection::Inconclusive;
    }
    let view = DeskView::new(h);
    let mut work = Work::new(budget);
    let mut chosen = Vec::with_capacity(k);
    if matching_rec(&view, k, 0, 0, &mut chosen, &mut work) {
        let stars = chosen
            .into_iter()
            .map(|ei| ExpansionStar {
                center: view.masks[ei].trailing_zeros() as usize,
                hyperedges: vec![ei],
            })
            .collect();
        return Detection::Witness(ExpansionWitness { stars });
    }
    if work.exhausted {
        return Detection::Inconclusive;
    }
    Detection::Exhausted
}

fn matching_rec(
    view: &DeskView,
    k: usize,
    pos: usize,
    occupied: u64,
    chosen: &mut Vec<usize>,
    work: &mut Work,
) -> bool {
    if chosen.len() == k {
        return true;
    }
    if !work.tick() {
        return false;
    }
    if pos >= view.masks.len() || chosen.len() + (view.masks.len() - pos) < k {
        return false;
    }
    if transversal_smaller_than(&view.masks[pos..], occupied, k - chosen.len()) {
        return false;
    }
    if view.masks[pos] & occupied == 0 {
        chosen.push(pos);
        if matching_rec(view, k, pos + 1, occupied | view.masks[pos], chosen, work) {
            return true;
        }
        chosen.pop();
    }
    if work.exhausted {
        return false;
    }
    matching_rec(view, k, pos + 1, occupied, chosen, work)
}

/// True when some vertex set of size below `limit` meets every candidate
/// edge avoiding `occupied`; disjoint edges each consume a transversal
/// vertex, so no `limit`-packing exists then. Greedy by max coverage.
fn transversal_smaller_than(masks: &[u64], occupied: u64, limit: usize) -> bool {
    let mut remaining: Vec<u64> = masks
        .iter()
        .copied()
        .filter(|&m| m & occupied == 0)
        .collect();
    for _ in 0..limit {
        if remaining.is_empty() {
            return true;
        }
        let mut counts = [0u32; 64];
        for &m in &remaining {
            let mut rest = m;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                counts[v] += 1;
            }
        }
        let best = (0..64).max_by_key(|&v| counts[v]).unwrap();
        remaining.retain(|&m| m >> best & 1 == 0);
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("assignment not injective")]
    AssignmentNotInjective,
    #[error("stars not disjoint")]
    StarsNotDisjoint,
    #[error("skeleton edge not inside its hyperedge")]
    SkeletonNotCovered,
    #[error("hyperedge index out of range")]
    EdgeIndexOutOfRange,
    #[error("representative not in its edge")]
    RepresentativeNotInEdge,
    #[error("representatives not distinct")]
    RepresentativesNotDistinct,
    #[error("edge indices not distinct")]
    EdgeIndicesNotDistinct,
    #[error("star has wrong number of edges: expected {expected}, got {got}")]
    WrongStarSize { expected: usize, got: usize },
    #[error("wrong number of stars: expected {expected}, got {got}")]
    WrongStarCount { expected: usize, got: usize },
    #[error("star edges share more than the center")]
    StarEdgesOverlap,
    #[error("center missing from a hyperedge")]
    CenterNotInEdge,
    #[error("skeleton is not a star on distinct leaves")]
    SkeletonNotStar,
    #[error("witness kind does not match the pattern")]
    WrongKind,
}

pub fn verify_sdr(m: &MultiHypergraph, w: &SdrWitness) -> Result<(), WitnessError> {
    let mut edges_seen = HashSet::new();
    let mut reps_seen = HashSet::new();
    for &(e, v) in &w.pairs {
        if e >= m.edge_count() {
            return Err(WitnessError::EdgeIndexOutOfRange);
        }
        if !edges_seen.insert(e) {
            return Err(WitnessError::EdgeIndicesNotDistinct);
        }
        if !reps_seen.insert(v) {
            return Err(WitnessError::RepresentativesNotDistinct);
        }
        if m.edges()[e].binary_search(&v).is_err() {
            return Err(WitnessError::RepresentativeNotInEdge);
        }
    }
    Ok(())
}

pub fn verify_berge_star_forest(
    h: &Hypergraph,
    k: usize,
    l: usize,
    stars: &[BergeWitness],
) -> Result<(), WitnessError> {
    if stars.len() != k {
        return Err(WitnessError::WrongStarCount {
            expected: k,
            got: stars.len(),
        });
    }
    let mut assigned = HashSet::new();
    let mut spans: Vec<HashSet<usize>> = Vec::new();
    for star in stars {
        if star.hyperedges.len() != l || star.skeleton.len() != l {
            return Err(WitnessError::WrongStarSize {
                expected: l,
                got: star.hyperedges.len(),
            });
        }
        let mut span = HashSet::new();
        span.insert(star.center);
        for (&(u, v), &ei) in star.skeleton.iter().zip(&star.hyperedges) {
            if ei >= h.edge_count() {
                return Err(WitnessError::EdgeIndexOutOfRange);
            }
            if !assigned.insert(ei) {
                return Err(WitnessError::AssignmentNotInjective);
            }
            let leaf = if u == star.center {
                v
            } else if v == star.center {
                u
            } else {
                return Err(WitnessError::SkeletonNotStar);
            };
            if leaf == star.center || !span.insert(leaf) {
                return Err(WitnessError::SkeletonNotStar);
            }
            let edge = &h.edges()[ei];
            if edge.binary_search(&u).is_err() || edge.binary_search(&v).is_err() {
                return Err(WitnessError::SkeletonNotCovered);
            }
        }
        spans.push(span);
    }
    for i in 0..spans.len() {
        for j in i + 1..spans.len() {
            if !spans[i].is_disjoint(&spans[j]) {
                return Err(WitnessError::StarsNotDisjoint);
            }
        }
    }
    Ok(())
}

pub fn verify_expansion_star_forest(
    h: &Hypergraph,
    k: usize,
    l: usize,
    w: &ExpansionWitness,
) -> Result<(), WitnessError> {
    if w.stars.len() != k {
        return Err(WitnessError::WrongStarCount {
            expected: k,
            got: w.stars.len(),
        });
    }
    let mut all_edges = HashSet::new();
    let mut spans: Vec<HashSet<usize>> = Vec::new();
    for star in &w.stars {
        if star.hyperedges.len() != l {
            return Err(WitnessError::WrongStarSize {
                expected: l,
                got: star.hyperedges.len(),
            });
        }
        let mut span = HashSet::new();
        for &ei in &star.hyperedges {
            if ei >= h.edge_count() {
                return Err(WitnessError::EdgeIndexOutOfRange);
            }
            if !all_edges.insert(ei) {
                return Err(WitnessError::EdgeIndicesNotDistinct);
            }
            let edge = &h.edges()[ei];
            if edge.binary_search(&star.center).is_err() {
                return Err(WitnessError::CenterNotInEdge);
            }
            span.extend(edge.iter().copied());
        }
        // pairwise intersections must be exactly the center
        for (a, b) in star.hyperedges.iter().tuple_combinations() {
            let common = crate::hypercore::intersection_size(&h.edges()[*a], &h.edges()[*b]);
            if common != 1 {
                return Err(WitnessError::StarEdgesOverlap);
            }
        }
        spans.push(span);
    }
    for i in 0..spans.len() {
        for j in i + 1..spans.len() {
            if !spans[i].is_disjoint(&spans[j]) {
                return Err(WitnessError::StarsNotDisjoint);
            }
        }
    }
    Ok(())
}

/// Independent witness checker for any pattern.
pub fn verify_witness(
    h: &Hypergraph,
    pattern: &Pattern,
    witness: &PatternWitness,
) -> Result<(), WitnessError> {
    match (pattern, witness) {
        (Pattern::BergeStarForest { k, l }, PatternWitness::Berge(stars))
        | (Pattern::GraphStarForest { k, l }, PatternWitness::Berge(stars)) => {
            verify_berge_star_forest(h, *k, *l, stars)
        }
        (Pattern::ExpansionStarForest { k, l }, PatternWitness::Expansion(w)) => {
            verify_expansion_star_forest(h, *k, *l, w)
        }
        (Pattern::Matching { k }, PatternWitness::Expansion(w)) => {
            verify_expansion_star_forest(h, *k, 1, w)
        }
        _ => Err(WitnessError::WrongKind),
    }
}

/// Bound on the number of vertices of degree below `d` in a hypergraph of
/// average degree at least `d - eps` and maximum degree at most `delta`:
/// `(delta - d + eps) / (delta - d + 1) * n`, exactly.
pub fn adl_bound(d: u64, delta: u64, eps: &Rational, n: u64) -> Result<Rational, DetectError> {
    if delta < d || d < 1 {
        return Err(DetectError::BadParams(format!(
            "need delta >= d >= 1, got d={d} delta={delta}"
        )));
    }
    if eps < &integer(0) || eps >= &integer(1) {
        return Err(DetectError::BadParams(format!("need 0 <= eps < 1, got {eps}")));
    }
    let gap = integer(delta - d);
    Ok((gap.clone() + eps) / (gap + integer(1)) * integer(n))
}

/// Convenience wrapper for tests: `eps` as a ratio of integers.
pub fn adl_bound_ratio(d: u64, delta: u64, eps_num: u64, eps_den: u64, n: u64) -> Rational {
    adl_bound(d, delta, &ratio(eps_num, eps_den), n).expect("valid parameters")
}

#[cfg(test)]
mod tests;
