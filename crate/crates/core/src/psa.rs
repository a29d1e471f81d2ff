//! Deterministic insertion-only streaming algorithm for vertex cover.
//!
//! Keeps a greedy maximal matching `M` and, for every matched vertex, up to
//! `k` further incident edges. A matched vertex whose list is full has degree
//! above `k` in the stored graph, so every cover of size at most `k` of the
//! stored graph contains it; this is what makes dropped edges harmless.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::Graph;
use crate::kernel::vc_decide;
use crate::types::{Edge, VcAnswer, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsaState {
    k: u32,
    matching: BTreeSet<Edge>,
    mate: BTreeMap<VertexId, VertexId>,
    /// Non-matching edges kept for some matched endpoint.
    stored: BTreeSet<Edge>,
    /// Number of stored edges charged to each matched vertex (at most `k`).
    load: BTreeMap<VertexId, u32>,
    dead: bool,
}

impl PsaState {
    pub fn new(k: u32) -> Self {
        PsaState {
            k,
            matching: BTreeSet::new(),
            mate: BTreeMap::new(),
            stored: BTreeSet::new(),
            load: BTreeMap::new(),
            dead: false,
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn is_dead(&self) -> bool {
        self.dead
    }

    pub fn matching(&self) -> &BTreeSet<Edge> {
        &self.matching
    }

    pub fn is_matched(&self, v: VertexId) -> bool {
        self.mate.contains_key(&v)
    }

    /// Size of the matched-vertex index `V_M`.
    pub fn matched_vertices(&self) -> usize {
        self.mate.len()
    }

    /// Distinct non-matching edges held in `E_M`.
    pub fn stored_edges(&self) -> usize {
        self.stored.len()
    }

    /// Edges charged to `v`'s list.
    pub fn load(&self, v: VertexId) -> u32 {
        self.load.get(&v).copied().unwrap_or(0)
    }

    /// Words held: two per matching edge and stored edge, two per matched
    /// vertex entry, two per load counter.
    pub fn words(&self) -> usize {
        2 * (self.matching.len() + self.stored.len() + self.mate.len() + self.load.len())
    }

    /// Processes one insertion. Once the matching exceeds `k` edges the state
    /// is dead: it keeps the `k + 1` matching edges as a witness, frees
    /// everything else and ignores further input.
    pub fn insert(&mut self, e: Edge) {
        if self.dead {
            return;
        }
        let (u, v) = (e.u(), e.v());
        if !self.is_matched(u) && !self.is_matched(v) {
            self.matching.insert(e);
            self.mate.insert(u, v);
            self.mate.insert(v, u);
            if self.matching.len() > self.k as usize {
                self.dead = true;
                self.stored.clear();
                self.load.clear();
                self.mate.clear();
            }
            return;
        }
        for w in [u, v] {
            if !self.is_matched(w) {
                continue;
            }
            let load = self.load.entry(w).or_insert(0);
            if *load < self.k {
                *load += 1;
                self.stored.insert(e);
            }
        }
    }

    /// The stored graph `G_M`: matching edges plus kept edges.
    pub fn stored_graph(&self) -> Graph {
        Graph::from_edges(self.matching.iter().chain(self.stored.iter()).copied())
    }

    /// Answers for the graph seen so far. A `Yes` cover of the stored graph is
    /// a cover of the whole graph.
    pub fn query(&self, k: u32) -> VcAnswer {
        if self.dead {
            return VcAnswer::No;
        }
        vc_decide(&self.stored_graph(), k)
    }
}

pub fn psa_insert(st: &mut PsaState, e: Edge) {
    st.insert(e)
}

pub fn psa_query(st: &PsaState, k: u32) -> VcAnswer {
    st.query(k)
}
