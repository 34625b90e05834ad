//! Canonical forms by orbit-pruned search over vertex orderings.
//!
//! Edges are bitmasks and compared numerically, so the edge order is colex
//! on vertex sets. The canonical representative of an isomorphism class is
//! the lexicographically smallest sorted mask vector over all relabelings.
//! The search assigns new labels 0, 1, ... one original vertex at a time;
//! once labels `0..=t` are placed, the image edges inside them are final and
//! form a prefix of the image vector, which is compared against the
//! reference incrementally. Relabelings that tie with the reference are
//! automorphisms and are used to skip equivalent branches.

use super::{write_hypergraph, CoreError, Hypergraph};
use std::cmp::Ordering;

pub const DEFAULT_CANON_LIMIT: usize = 12;

/// Masks are `u32`; the search is not meant to go anywhere near this.
const HARD_LIMIT: usize = 20;
const MAX_RECORDED_AUTS: usize = 256;
const UNASSIGNED: u32 = u32::MAX;

/// Canonical byte string of `h` under the default size limit: equal output
/// iff isomorphic. The output is the serialized text of the canonically
/// relabeled hypergraph.
pub fn canonical_form(h: &Hypergraph) -> Result<Vec<u8>, CoreError> {
    canonical_form_with_limit(h, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(h: &Hypergraph, limit: usize) -> Result<Vec<u8>, CoreError> {
    let limit = limit.min(HARD_LIMIT);
    if h.n() > limit {
        return Err(CoreError::SizeLimitExceeded { n: h.n(), limit });
    }
    let masks: Vec<u32> = h.edge_masks().iter().map(|&m| m as u32).collect();
    let canon = canonical_masks(h.n(), &masks);
    let canon64: Vec<u64> = canon.iter().map(|&m| m as u64).collect();
    let relabeled = Hypergraph::from_masks(h.n(), h.r(), &canon64);
    Ok(write_hypergraph(&relabeled).into_bytes())
}

/// Lexicographically smallest sorted mask vector over all relabelings.
pub(crate) fn canonical_masks(n: usize, masks: &[u32]) -> Vec<u32> {
    let mut sorted = masks.to_vec();
    sorted.sort_unstable();
    let mut search = Search::new(n, sorted);
    search.minimize = true;
    search.run();
    search.reference
}

/// True iff `sorted_masks` is already the canonical representative of its
/// isomorphism class; `sorted_masks` must be strictly increasing.
pub(crate) fn is_canonical(n: usize, sorted_masks: &[u32]) -> bool {
    debug_assert!(sorted_masks.windows(2).all(|w| w[0] < w[1]));
    let mut search = Search::new(n, sorted_masks.to_vec());
    search.run();
    !search.found_smaller
}

struct Search {
    n: usize,
    orig: Vec<u32>,
    vert_edges: Vec<Vec<usize>>,
    /// Comparison target; in minimize mode the best image found so far.
    reference: Vec<u32>,
    /// new label -> original vertex, for the labeling that produced
    /// `reference` (identity initially, since `reference` starts as the
    /// input under the identity labeling).
    best_assigned: Vec<usize>,
    label_of: Vec<u32>,
    assigned: Vec<usize>,
    assigned_mask: u32,
    image: Vec<u32>,
    auts: Vec<Vec<usize>>,
    minimize: bool,
    found_smaller: bool,
}

impl Search {
    fn new(n: usize, sorted_masks: Vec<u32>) -> Self {
        let mut vert_edges = vec![Vec::new(); n];
        for (i, &m) in sorted_masks.iter().enumerate() {
            for v in 0..n {
                if m >> v & 1 == 1 {
                    vert_edges[v].push(i);
                }
            }
        }
        Search {
            n,
            reference: sorted_masks.clone(),
            orig: sorted_masks,
            vert_edges,
            best_assigned: (0..n).collect(),
            label_of: vec![UNASSIGNED; n],
            assigned: Vec::with_capacity(n),
            assigned_mask: 0,
            image: Vec::new(),
            auts: Vec::new(),
            minimize: false,
            found_smaller: false,
        }
    }

    fn run(&mut self) {
        self.dfs(0, Ordering::Equal);
    }

    fn dfs(&mut self, t: usize, state: Ordering) {
        if self.found_smaller && !self.minimize {
            return;
        }
        // All edges placed: the remaining vertices are isolated and any
        // completion yields the same image.
        if self.image.len() == self.orig.len() {
            self.finish_leaf(state);
            return;
        }
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if self.label_of[v] != UNASSIGNED || self.skip_by_automorphism(t, v, &tried) {
                continue;
            }
            tried.push(v);

            let with_v = self.assigned_mask | (1 << v);
            let mut batch: Vec<u32> = Vec::new();
            for &e_idx in &self.vert_edges[v] {
                let mask = self.orig[e_idx];
                if mask & !with_v == 0 {
                    batch.push(self.map_mask(mask, v, t as u32));
                }
            }
            batch.sort_unstable();

            let mut next_state = state;
            let mut prune = false;
            if next_state == Ordering::Equal {
                for (i, &bm) in batch.iter().enumerate() {
                    match bm.cmp(&self.reference[self.image.len() + i]) {
                        Ordering::Less => {
                            next_state = Ordering::Less;
                            break;
                        }
                        Ordering::Greater => {
                            prune = true;
                            break;
                        }
                        Ordering::Equal => {}
                    }
                }
                // Every image mask placed from step t+1 on exceeds the masks
                // representable inside labels 0..=t; if the reference still
                // has one of those coming, this branch can only be larger.
                if !prune && next_state == Ordering::Equal {
                    let pos = self.image.len() + batch.len();
                    if pos < self.reference.len() && self.reference[pos] < (1u32 << (t + 1)) {
                        prune = true;
                    }
                }
            }
            if !prune {
                let image_len = self.image.len();
                self.image.extend_from_slice(&batch);
                self.label_of[v] = t as u32;
                self.assigned.push(v);
                self.assigned_mask = with_v;

                self.dfs(t + 1, next_state);

                self.image.truncate(image_len);
                self.label_of[v] = UNASSIGNED;
                self.assigned.pop();
                self.assigned_mask &= !(1 << v);
            }
            if self.found_smaller && !self.minimize {
                return;
            }
        }
    }

    fn finish_leaf(&mut self, state: Ordering) {
        // Full compare: `state` can be stale in minimize mode after the
        // reference improved under an ancestor.
        let _ = state;
        match self.image.as_slice().cmp(self.reference.as_slice()) {
            Ordering::Less => {
                if self.minimize {
                    self.reference = self.image.clone();
                    self.best_assigned = self.complete_assignment();
                } else {
                    self.found_smaller = true;
                }
            }
            Ordering::Equal => {
                if self.auts.len() + 1 < MAX_RECORDED_AUTS {
                    let leaf_assigned = self.complete_assignment();
                    // alpha sends the reference labeling's vertex to this
                    // leaf's vertex with the same label; it maps the edge
                    // set onto itself, and so does its inverse.
                    let mut alpha = vec![0usize; self.n];
                    let mut inv = vec![0usize; self.n];
                    for label in 0..self.n {
                        alpha[self.best_assigned[label]] = leaf_assigned[label];
                        inv[leaf_assigned[label]] = self.best_assigned[label];
                    }
                    if alpha != inv {
                        self.auts.push(inv);
                    }
                    self.auts.push(alpha);
                }
            }
            Ordering::Greater => {}
        }
    }

    /// The current assignment with unassigned (isolated) vertices appended
    /// in ascending order; returns the full label -> vertex table.
    fn complete_assignment(&self) -> Vec<usize> {
        let mut full = self.assigned.clone();
        for v in 0..self.n {
            if self.label_of[v] == UNASSIGNED {
                full.push(v);
            }
        }
        full
    }

    /// Skip `v` when a recorded automorphism fixes every vertex assigned so
    /// far and maps `v` onto a sibling already tried at this node.
    fn skip_by_automorphism(&self, t: usize, v: usize, tried: &[usize]) -> bool {
        self.auts.iter().any(|alpha| {
            self.assigned[..t].iter().all(|&u| alpha[u] == u) && tried.contains(&alpha[v])
        })
    }

    fn map_mask(&self, mask: u32, v: usize, v_label: u32) -> u32 {
        let mut out = 1u32 << v_label;
        let mut rest = mask & !(1u32 << v);
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << self.label_of[u];
        }
        out
    }
}
