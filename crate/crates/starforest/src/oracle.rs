//! Exact desk-scale Turán oracles.
//!
//! [`exact_turan`] maximizes the number of edges over all n-vertex r-uniform
//! hypergraphs (optionally linear) avoiding a forbidden family;
//! [`exact_generalized_turan`] maximizes the number of r-cliques over
//! star-forest-free graphs. Both explore candidate edges in increasing
//! bitmask order and extend a partial edge set only when it is the
//! canonical representative of its isomorphism class, so every class of
//! free hypergraphs is visited exactly once and the extremal examples come
//! out isomorph-free. Freeness is maintained incrementally; admissible
//! degree bounds prune the search without ever cutting an optimal branch.
//!
//! The search tree may be explored by parallel workers; the frontier split
//! is deterministic and results are merged in task order, so reports are
//! byte-identical for any worker count.

use crate::detect::{Detection, Pattern, SearchBudget};
use crate::hypercore::{is_canonical, write_hypergraph, Graph, Hypergraph};
use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search too large: {0}")]
    TooLarge(String),
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("pattern requires uniformity 2, search has r = {0}")]
    WrongUniformity(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Host {
    All,
    Linear,
}

impl Host {
    pub fn as_str(self) -> &'static str {
        match self {
            Host::All => "all",
            Host::Linear => "linear",
        }
    }
}

/// Forbidden family: a monotone pattern plus the host class searched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ForbiddenFamily {
    pub pattern: Pattern,
    pub host: Host,
}

impl ForbiddenFamily {
    pub fn all(pattern: Pattern) -> Self {
        ForbiddenFamily {
            pattern,
            host: Host::All,
        }
    }

    pub fn linear(pattern: Pattern) -> Self {
        ForbiddenFamily {
            pattern,
            host: Host::Linear,
        }
    }

    fn params(&self) -> (u64, u64) {
        match self.pattern {
            Pattern::BergeStarForest { k, l }
            | Pattern::ExpansionStarForest { k, l }
            | Pattern::GraphStarForest { k, l } => (k as u64, l as u64),
            Pattern::Matching { k } => (k as u64, 1),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyJson {
    pub pattern: &'static str,
    pub k: u64,
    pub l: u64,
    pub host: &'static str,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReportStatus {
    /// The search space was exhausted.
    Exact,
    /// Exhausted, but the extremal list was truncated at the cap.
    ExactExtremalCapped,
    /// A resource cap was hit; `optimum` is only a lower bound.
    Capped,
}

/// Result of an exact search: the optimum, every extremal example up to
/// isomorphism (canonical text form), the search-tree size, and whether the
/// search space was exhausted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub r: usize,
    pub family: FamilyJson,
    pub optimum: u64,
    pub extremal: Vec<String>,
    pub nodes: u64,
    pub status: ReportStatus,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Cap on search-tree nodes per task.
    pub node_cap: u64,
    /// Worker threads; results are identical for any count.
    pub workers: usize,
    /// Cap on collected extremal examples.
    pub extremal_cap: usize,
    /// Budget for the per-node freeness fallback (multi-star families).
    pub check_budget: SearchBudget,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_cap: 10_000_000,
            workers: 1,
            extremal_cap: 100,
            check_budget: SearchBudget::default(),
        }
    }
}

const MAX_SEARCH_VERTICES: usize = 16;
/// Frontier depth for the deterministic parallel split.
const SPLIT_DEPTH: usize = 2;

/// Maximum edge count over family-free hypergraphs on `n` labeled vertices.
pub fn exact_turan(
    n: usize,
    r: usize,
    family: ForbiddenFamily,
    options: SearchOptions,
) -> Result<SearchReport, OracleError> {
    let ctx = Ctx::new(n, r, family, Objective::EdgeCount, options)?;
    Ok(ctx.run())
}

/// Maximum number of r-cliques over graphs on `n` vertices with no `k`
/// disjoint `l`-edge stars.
pub fn exact_generalized_turan(
    n: usize,
    r: usize,
    k: usize,
    l: usize,
    options: SearchOptions,
) -> Result<SearchReport, OracleError> {
    if r < 2 {
        return Err(OracleError::BadParams(format!("need clique size r >= 2, got {r}")));
    }
    let family = ForbiddenFamily::all(Pattern::GraphStarForest { k, l });
    let ctx = Ctx::new(n, 2, family, Objective::CliqueCount { size: r }, options)?;
    Ok(ctx.run())
}

/// Number of r-cliques, by recursive candidate-set intersection.
pub fn count_cliques(g: &Graph, r: usize) -> u64 {
    let adj = adjacency_masks(g);
    let all = if g.n() == 0 { 0 } else { (1u32 << g.n()) - 1 };
    cliques_in(&adj, all, r)
}

/// The r-uniform hypergraph whose edges are the r-cliques of `g`.
pub fn clique_hypergraph(g: &Graph, r: usize) -> Hypergraph {
    let adj = adjacency_masks(g);
    let edges: Vec<Vec<usize>> = (0..g.n())
        .combinations(r)
        .filter(|clique| {
            clique
                .iter()
                .tuple_combinations()
                .all(|(&u, &v)| adj[u] >> v & 1 == 1)
        })
        .collect();
    Hypergraph::new(g.n(), r, edges).expect("cliques are valid edges")
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32, "adjacency masks need n <= 32");
    let mut adj = vec![0u32; g.n()];
    for (u, v) in g.pairs() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn cliques_in(adj: &[u32], allowed: u32, remaining: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    if (allowed.count_ones() as usize) < remaining {
        return 0;
    }
    let mut total = 0;
    let mut rest = allowed;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let above = !((1u32 << v) - 1) & !(1 << v);
        total += cliques_in(adj, allowed & adj[v] & above, remaining - 1);
    }
    total
}

/// Reference implementation with no pruning and no symmetry breaking:
/// enumerates every subset of candidate edges. Only for tiny searches.
pub fn naive_exact_turan(
    n: usize,
    r: usize,
    family: ForbiddenFamily,
) -> Result<u64, OracleError> {
    validate_family(r, family)?;
    let cands = candidate_masks(n, r);
    if cands.len() > 22 {
        return Err(OracleError::TooLarge(format!(
            "{} candidate edges is too many for exhaustive subset enumeration",
            cands.len()
        )));
    }
    let budget = SearchBudget::default();
    let mut best = 0u64;
    for bits in 0u64..(1 << cands.len()) {
        if (bits.count_ones() as u64) <= best {
            continue;
        }
        let masks: Vec<u64> = cands
            .iter()
            .enumerate()
            .filter(|&(i, _)| bits >> i & 1 == 1)
            .map(|(_, &m)| m as u64)
            .collect();
        if family.host == Host::Linear
            && masks
                .iter()
                .tuple_combinations()
                .any(|(&a, &b)| (a & b).count_ones() > 1)
        {
            continue;
        }
        let h = Hypergraph::from_masks(n, r, &masks);
        match family.pattern.detect(&h, budget).expect("validated family") {
            Detection::Exhausted => best = bits.count_ones() as u64,
            Detection::Witness(_) => {}
            Detection::Inconclusive => {
                return Err(OracleError::TooLarge("freeness check exceeded budget".into()))
            }
        }
    }
    Ok(best)
}

fn validate_family(r: usize, family: ForbiddenFamily) -> Result<(), OracleError> {
    let (k, l) = family.params();
    if k < 1 || l < 1 {
        return Err(OracleError::BadParams(format!("need k, l >= 1, got k={k} l={l}")));
    }
    if matches!(family.pattern, Pattern::GraphStarForest { .. }) && r != 2 {
        return Err(OracleError::WrongUniformity(r));
    }
    Ok(())
}

fn candidate_masks(n: usize, r: usize) -> Vec<u32> {
    let mut cands: Vec<u32> = (0..n)
        .combinations(r)
        .map(|e| e.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    cands.sort_unstable();
    cands
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Objective {
    EdgeCount,
    CliqueCount { size: usize },
}

/// Per-vertex degree cap valid in every free hypergraph, if the family has
/// one (single Berge star families only).
fn family_degree_cap(r: usize, family: ForbiddenFamily) -> Option<u64> {
    match family.pattern {
        Pattern::BergeStarForest { k: 1, l } | Pattern::GraphStarForest { k: 1, l } => {
            if l <= r || r == 2 {
                Some(l as u64 - 1)
            } else {
                // a center of larger degree always admits an l-SDR in its link
                let cap = num_integer::binomial(
                    num_bigint::BigInt::from(l - 1),
                    num_bigint::BigInt::from(r - 1),
                );
                use num_traits::ToPrimitive;
                cap.to_u64()
            }
        }
        _ => None,
    }
}

struct Ctx {
    n: usize,
    r: usize,
    family: ForbiddenFamily,
    objective: Objective,
    options: SearchOptions,
    cands: Vec<u32>,
    degree_cap: Option<u64>,
    /// Upper bound on new r-cliques a single new edge can create.
    clique_gain_cap: u64,
}

impl Ctx {
    fn new(
        n: usize,
        r: usize,
        family: ForbiddenFamily,
        objective: Objective,
        options: SearchOptions,
    ) -> Result<Self, OracleError> {
        if n > MAX_SEARCH_VERTICES {
            return Err(OracleError::TooLarge(format!(
                "n = {n} exceeds the search limit {MAX_SEARCH_VERTICES}"
            )));
        }
        if r < 1 || r > n.max(1) {
            return Err(OracleError::BadParams(format!("need 1 <= r <= n, got n={n} r={r}")));
        }
        validate_family(r, family)?;
        let clique_gain_cap = match objective {
            Objective::EdgeCount => 0,
            Objective::CliqueCount { size } => {
                if size < 2 || size > n.max(2) {
                    return Err(OracleError::BadParams(format!(
                        "clique size {size} out of range for n = {n}"
                    )));
                }
                use num_traits::ToPrimitive;
                num_integer::binomial(
                    num_bigint::BigInt::from(n.saturating_sub(2)),
                    num_bigint::BigInt::from(size - 2),
                )
                .to_u64()
                .unwrap_or(u64::MAX)
            }
        };
        Ok(Ctx {
            degree_cap: family_degree_cap(r, family),
            cands: candidate_masks(n, r),
            n,
            r,
            family,
            objective,
            options,
            clique_gain_cap,
        })
    }

    fn run(&self) -> SearchReport {
        // Phase 1: walk the tree down to SPLIT_DEPTH, recording shallow
        // results and collecting frontier prefixes.
        let mut shallow = Walker::new(self);
        let mut frontier: Vec<Vec<usize>> = Vec::new();
        shallow.collect_frontier(0, &mut frontier);
        let mut outcomes = vec![shallow.into_outcome()];
        let base_best = outcomes[0].best;

        // Phase 2: explore each frontier subtree independently.
        let explore = |prefix: &Vec<usize>| -> Outcome {
            let mut walker = Walker::new(self);
            walker.best = base_best;
            for &c in prefix {
                walker.push_edge(c);
            }
            // the prefix node itself was counted in phase 1
            let start = prefix.last().map_or(0, |&c| c + 1);
            walker.descend(start);
            walker.into_outcome()
        };
        let task_results: Vec<Outcome> = if self.options.workers > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.options.workers)
                .build()
                .expect("worker pool");
            pool.install(|| frontier.par_iter().map(explore).collect())
        } else {
            frontier.iter().map(explore).collect()
        };
        outcomes.extend(task_results);

        // Deterministic merge in task order.
        let optimum = outcomes.iter().map(|o| o.best).max().unwrap_or(0);
        let mut extremal = Vec::new();
        let mut truncated = false;
        let mut nodes = 0;
        let mut capped = false;
        for outcome in &outcomes {
            nodes += outcome.nodes;
            capped |= outcome.capped;
            truncated |= outcome.truncated;
            if outcome.best == optimum {
                for s in &outcome.solutions {
                    if extremal.len() >= self.options.extremal_cap {
                        truncated = true;
                        break;
                    }
                    extremal.push(s.clone());
                }
            }
        }
        let status = if capped {
            ReportStatus::Capped
        } else if truncated {
            ReportStatus::ExactExtremalCapped
        } else {
            ReportStatus::Exact
        };
        let (k, l) = self.family.params();
        SearchReport {
            n: self.n,
            r: match self.objective {
                Objective::EdgeCount => self.r,
                Objective::CliqueCount { size } => size,
            },
            family: FamilyJson {
                pattern: self.family.pattern.name(),
                k,
                l,
                host: self.family.host.as_str(),
            },
            optimum,
            extremal,
            nodes,
            status,
        }
    }
}

struct Outcome {
    best: u64,
    solutions: Vec<String>,
    nodes: u64,
    capped: bool,
    truncated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FreeCheck {
    Free,
    Blocked,
    Unknown,
}

struct Walker<'a> {
    ctx: &'a Ctx,
    sel: Vec<usize>,
    masks: Vec<u32>,
    degrees: Vec<u64>,
    adj: Vec<u32>,
    cliques: u64,
    best: u64,
    solutions: Vec<String>,
    nodes: u64,
    capped: bool,
    truncated: bool,
}

impl<'a> Walker<'a> {
    fn new(ctx: &'a Ctx) -> Self {
        Walker {
            ctx,
            sel: Vec::new(),
            masks: Vec::new(),
            degrees: vec![0; ctx.n],
            adj: vec![0; ctx.n],
            cliques: 0,
            best: 0,
            solutions: Vec::new(),
            nodes: 0,
            capped: false,
            truncated: false,
        }
    }

    fn value(&self) -> u64 {
        match self.ctx.objective {
            Objective::EdgeCount => self.sel.len() as u64,
            Objective::CliqueCount { .. } => self.cliques,
        }
    }

    fn push_edge(&mut self, c: usize) {
        let mask = self.ctx.cands[c];
        if let Objective::CliqueCount { size } = self.ctx.objective {
            let (u, v) = mask_pair(mask);
            let common = self.adj[u] & self.adj[v];
            self.cliques += cliques_in(&self.adj, common, size - 2);
        }
        if self.ctx.r == 2 {
            let (u, v) = mask_pair(mask);
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        }
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.degrees[v] += 1;
        }
        self.sel.push(c);
        self.masks.push(mask);
    }

    fn pop_edge(&mut self, c: usize) {
        let mask = self.ctx.cands[c];
        self.sel.pop();
        self.masks.pop();
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.degrees[v] -= 1;
        }
        if self.ctx.r == 2 {
            let (u, v) = mask_pair(mask);
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
        if let Objective::CliqueCount { size } = self.ctx.objective {
            let (u, v) = mask_pair(mask);
            let common = self.adj[u] & self.adj[v];
            self.cliques -= cliques_in(&self.adj, common, size - 2);
        }
    }

    /// Records the current node as a solution candidate.
    fn visit(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.ctx.options.node_cap {
            self.capped = true;
            return false;
        }
        let value = self.value();
        if value > self.best {
            self.best = value;
            self.solutions.clear();
        }
        if value == self.best {
            if self.solutions.len() <= self.ctx.options.extremal_cap {
                let masks64: Vec<u64> = self.masks.iter().map(|&m| m as u64).collect();
                let h = Hypergraph::from_masks(self.ctx.n, self.ctx.r, &masks64);
                self.solutions.push(write_hypergraph(&h));
            } else {
                self.truncated = true;
            }
        }
        true
    }

    /// Admissible upper bound on the objective gain from extending with
    /// candidates at positions `>= start`.
    fn gain_bound(&self, start: usize) -> u64 {
        let avail = (self.ctx.cands.len() - start) as u64;
        match self.ctx.objective {
            Objective::EdgeCount => {
                let by_capacity = self.ctx.degree_cap.map_or(u64::MAX, |cap| {
                    let slack: u64 = self
                        .degrees
                        .iter()
                        .map(|&d| cap.saturating_sub(d))
                        .sum();
                    slack / self.ctx.r as u64
                });
                avail.min(by_capacity)
            }
            Objective::CliqueCount { .. } => avail.saturating_mul(self.ctx.clique_gain_cap),
        }
    }

    /// Full DFS from candidate position `start`; the current node has
    /// already been pushed but not visited.
    fn descend(&mut self, start: usize) {
        if !self.visit() {
            return;
        }
        if self.value() + self.gain_bound(start) < self.best {
            return;
        }
        for c in start..self.ctx.cands.len() {
            if self.value() + self.gain_bound(c) < self.best {
                break;
            }
            if !self.admissible(c) {
                continue;
            }
            self.push_edge(c);
            if is_canonical(self.ctx.n, &self.masks) {
                self.descend(c + 1);
            }
            self.pop_edge(c);
            if self.capped {
                return;
            }
        }
    }

    /// Phase-1 walk: explores to `SPLIT_DEPTH`, recording shallow nodes and
    /// emitting the frontier prefixes that remain to be searched.
    fn collect_frontier(&mut self, start: usize, frontier: &mut Vec<Vec<usize>>) {
        if self.sel.len() == SPLIT_DEPTH {
            frontier.push(self.sel.clone());
            return;
        }
        if !self.visit() {
            return;
        }
        for c in start..self.ctx.cands.len() {
            if !self.admissible(c) {
                continue;
            }
            self.push_edge(c);
            if is_canonical(self.ctx.n, &self.masks) {
                self.collect_frontier(c + 1, frontier);
            }
            self.pop_edge(c);
            if self.capped {
                return;
            }
        }
    }

    /// Host and freeness screening for adding candidate `c`.
    fn admissible(&mut self, c: usize) -> bool {
        let mask = self.ctx.cands[c];
        if self.ctx.family.host == Host::Linear
            && self.masks.iter().any(|&f| (f & mask).count_ones() > 1)
        {
            return false;
        }
        match self.still_free(mask) {
            FreeCheck::Free => true,
            FreeCheck::Blocked => false,
            FreeCheck::Unknown => {
                self.capped = true;
                false
            }
        }
    }

    /// Does adding `mask` keep the hypergraph family-free? Any new forbidden
    /// configuration must use the new edge, which restricts centers to its
    /// vertices for single-star families.
    fn still_free(&self, mask: u32) -> FreeCheck {
        match self.ctx.family.pattern {
            Pattern::Matching { k } => {
                if k == 1 {
                    return FreeCheck::Blocked; // any edge is a 1-matching
                }
                if self.completes_matching(mask, k - 1, 0) {
                    FreeCheck::Blocked
                } else {
                    FreeCheck::Free
                }
            }
            Pattern::BergeStarForest { k: 1, l }
            | Pattern::GraphStarForest { k: 1, l } => {
                if self.completes_berge_star(mask, l) {
                    FreeCheck::Blocked
                } else {
                    FreeCheck::Free
                }
            }
            Pattern::ExpansionStarForest { k: 1, l } => {
                if l == 1 {
                    return FreeCheck::Blocked;
                }
                if self.completes_expansion_star(mask, l) {
                    FreeCheck::Blocked
                } else {
                    FreeCheck::Free
                }
            }
            pattern => self.fallback_detect(mask, pattern),
        }
    }

    fn completes_matching(&self, avoid: u32, need: usize, from: usize) -> bool {
        if need == 0 {
            return true;
        }
        for i in from..self.masks.len() {
            let f = self.masks[i];
            if f & avoid == 0 && self.completes_matching(avoid | f, need - 1, i + 1) {
                return true;
            }
        }
        false
    }

    /// Would adding `mask` create a Berge star with `l` edges? The center
    /// must lie in the new edge; feasibility is an SDR on its link.
    fn completes_berge_star(&self, mask: u32, l: usize) -> bool {
        let mut center_bits = mask;
        while center_bits != 0 {
            let x = center_bits.trailing_zeros() as usize;
            center_bits &= center_bits - 1;
            if self.degrees[x] + 1 < l as u64 {
                continue;
            }
            let mut traces: Vec<u32> = self
                .masks
                .iter()
                .filter(|&&f| f >> x & 1 == 1)
                .map(|&f| f & !(1 << x))
                .collect();
            traces.push(mask & !(1 << x));
            if sdr_at_least(&traces, l, self.ctx.n) {
                return true;
            }
        }
        false
    }

    /// Would adding `mask` create an expanded star with `l` edges centered
    /// in it?
    fn completes_expansion_star(&self, mask: u32, l: usize) -> bool {
        let mut center_bits = mask;
        while center_bits != 0 {
            let x = center_bits.trailing_zeros() as usize;
            center_bits &= center_bits - 1;
            if self.degrees[x] + 1 < l as u64 {
                continue;
            }
            let new_trace = mask & !(1 << x);
            let others: Vec<u32> = self
                .masks
                .iter()
                .filter(|&&f| f >> x & 1 == 1 && (f & mask) == (1 << x))
                .map(|&f| f & !(1 << x))
                .collect();
            if pack_disjoint(&others, l - 1, 0, new_trace) {
                return true;
            }
        }
        false
    }

    fn fallback_detect(&self, mask: u32, pattern: Pattern) -> FreeCheck {
        let mut masks64: Vec<u64> = self.masks.iter().map(|&m| m as u64).collect();
        masks64.push(mask as u64);
        masks64.sort_unstable();
        let h = Hypergraph::from_masks(self.ctx.n, self.ctx.r, &masks64);
        match pattern.detect(&h, self.ctx.options.check_budget) {
            Ok(Detection::Exhausted) => FreeCheck::Free,
            Ok(Detection::Witness(_)) => FreeCheck::Blocked,
            Ok(Detection::Inconclusive) => FreeCheck::Unknown,
            Err(_) => FreeCheck::Unknown,
        }
    }

    fn into_outcome(self) -> Outcome {
        Outcome {
            best: self.best,
            solutions: self.solutions,
            nodes: self.nodes,
            capped: self.capped,
            truncated: self.truncated,
        }
    }
}

fn mask_pair(mask: u32) -> (usize, usize) {
    let u = mask.trailing_zeros() as usize;
    let v = (31 - mask.leading_zeros()) as usize;
    (u, v)
}

/// Packs `need` pairwise-disjoint traces, all disjoint from `occupied`.
fn pack_disjoint(traces: &[u32], need: usize, from: usize, occupied: u32) -> bool {
    if need == 0 {
        return true;
    }
    if traces.len() - from < need {
        return false;
    }
    for i in from..traces.len() {
        if traces[i] & occupied == 0 && pack_disjoint(traces, need - 1, i + 1, occupied | traces[i])
        {
            return true;
        }
    }
    false
}

/// Kuhn matching on bitmask traces, stopping once `l` edges are matched.
fn sdr_at_least(traces: &[u32], l: usize, n: usize) -> bool {
    if traces.len() < l {
        return false;
    }
    let mut rep: Vec<Option<usize>> = vec![None; n];
    let mut matched = 0;
    for start in 0..traces.len() {
        let mut seen = 0u32;
        if kuhn_u32(traces, start, &mut seen, &mut rep) {
            matched += 1;
            if matched >= l {
                return true;
            }
        }
    }
    false
}

fn kuhn_u32(traces: &[u32], e: usize, seen: &mut u32, rep: &mut [Option<usize>]) -> bool {
    let mut bits = traces[e] & !*seen;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        *seen |= 1 << v;
        if rep[v].is_none() || kuhn_u32(traces, rep[v].unwrap(), seen, rep) {
            rep[v] = Some(e);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests;
