//! Insertion-only feedback vertex set: a graph with a feedback vertex set of
//! size `k` has at most `n(k + 1)` edges, so storing edges up to that bound
//! and solving exactly at query time is enough.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::graph::{Graph, UnionFind};
use crate::types::{Cover, Edge, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FvsAnswer {
    Yes(Cover),
    No,
}

impl FvsAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, FvsAnswer::Yes(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FvsState {
    n: u32,
    k: u32,
    stored: Graph,
    dead: bool,
}

impl FvsState {
    pub fn new(n: u32, k: u32) -> Self {
        FvsState {
            n,
            k,
            stored: Graph::new(),
            dead: false,
        }
    }

    /// Most edges kept before the state gives up: `n(k + 1)`.
    pub fn gate(&self) -> usize {
        self.n as usize * (self.k as usize + 1)
    }

    pub fn is_dead(&self) -> bool {
        self.dead
    }

    pub fn stored(&self) -> &Graph {
        &self.stored
    }

    pub fn words(&self) -> usize {
        2 * self.stored.edge_count() + 1
    }

    pub fn insert(&mut self, e: Edge) {
        if self.dead {
            return;
        }
        self.stored.add_edge(e);
        if self.stored.edge_count() > self.gate() {
            self.dead = true;
            self.stored = Graph::new();
        }
    }

    pub fn query(&self, k: u32) -> FvsAnswer {
        if self.dead {
            return FvsAnswer::No;
        }
        fvs_decide(&self.stored, k)
    }
}

pub fn fvs_insert(st: &mut FvsState, e: Edge) {
    st.insert(e)
}

pub fn fvs_query(st: &FvsState, k: u32) -> FvsAnswer {
    st.query(k)
}

/// Multigraph with loops, used by the reductions.
#[derive(Debug, Clone, Default)]
struct Multi {
    adj: BTreeMap<u32, BTreeMap<u32, u32>>,
}

impl Multi {
    fn from_graph(g: &Graph) -> Self {
        let mut m = Multi::default();
        for v in g.vertices() {
            m.adj.entry(v.0).or_default();
        }
        for e in g.edges() {
            m.add(e.u().0, e.v().0);
        }
        m
    }

    fn add(&mut self, a: u32, b: u32) {
        *self.adj.entry(a).or_default().entry(b).or_insert(0) += 1;
        if a != b {
            *self.adj.entry(b).or_default().entry(a).or_insert(0) += 1;
        }
    }

    fn remove_vertex(&mut self, v: u32) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for w in nbrs.keys() {
                if let Some(m) = self.adj.get_mut(w) {
                    m.remove(&v);
                }
            }
        }
    }

    /// Degree with a loop counting twice.
    fn degree(&self, v: u32) -> u32 {
        self.adj[&v]
            .iter()
            .map(|(&w, &c)| if w == v { 2 * c } else { c })
            .sum()
    }

    fn has_loop(&self, v: u32) -> bool {
        self.adj[&v].contains_key(&v)
    }

    fn is_acyclic_without(&self, removed: &BTreeSet<u32>) -> bool {
        let ids: BTreeMap<u32, usize> = self
            .adj
            .keys()
            .filter(|v| !removed.contains(v))
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut uf = UnionFind::new(ids.len());
        for (&a, nbrs) in &self.adj {
            if removed.contains(&a) {
                continue;
            }
            for (&b, &c) in nbrs.range(a..) {
                if removed.contains(&b) {
                    continue;
                }
                if a == b || c > 1 || !uf.union(ids[&a], ids[&b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Exact feedback vertex set decision. Reduces the graph (loops force their
/// vertex, vertices of degree at most one go, degree-two vertices are
/// bypassed, edge multiplicities are capped at two), then searches subsets
/// of the remaining vertices in increasing size.
pub fn fvs_decide(g: &Graph, k: u32) -> FvsAnswer {
    let mut m = Multi::from_graph(g);
    let mut budget = k;
    let mut forced = Cover::new();
    while let Some(v) = m
        .adj
        .keys()
        .copied()
        .find(|&v| m.has_loop(v) || m.degree(v) <= 2 || m.adj[&v].values().any(|&c| c > 2))
    {
        if m.has_loop(v) {
            if budget == 0 {
                return FvsAnswer::No;
            }
            budget -= 1;
            forced.insert(VertexId(v));
            m.remove_vertex(v);
            continue;
        }
        if let Some((&w, _)) = m.adj[&v].iter().find(|(_, &c)| c > 2) {
            m.adj.get_mut(&v).unwrap().insert(w, 2);
            m.adj.get_mut(&w).unwrap().insert(v, 2);
            continue;
        }
        let nbrs: Vec<(u32, u32)> = m.adj[&v].iter().map(|(&w, &c)| (w, c)).collect();
        m.remove_vertex(v);
        match nbrs.as_slice() {
            [(a, 1), (b, 1)] => m.add(*a, *b),
            [(a, 2)] => m.add(*a, *a),
            _ => {}
        }
    }
    let rest: Vec<u32> = m.adj.keys().copied().collect();
    for size in 0..=(budget as usize).min(rest.len()) {
        for pick in rest.iter().copied().combinations(size) {
            let removed: BTreeSet<u32> = pick.iter().copied().collect();
            if m.is_acyclic_without(&removed) {
                let cover: Cover = forced
                    .iter()
                    .copied()
                    .chain(pick.into_iter().map(VertexId))
                    .collect();
                assert!(cover.len() <= k as usize, "certificate exceeds budget");
                assert!(g.is_acyclic_without(&cover), "certificate leaves a cycle");
                return FvsAnswer::Yes(cover);
            }
        }
    }
    FvsAnswer::No
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(edges: &[(u32, u32)]) -> Graph {
        Graph::from_edges(edges.iter().map(|&(a, b)| Edge::new(a, b).unwrap()))
    }

    #[test]
    fn forests_need_nothing() {
        let g = graph(&[(1, 2), (2, 3), (2, 4), (5, 6)]);
        assert_eq!(fvs_decide(&g, 0), FvsAnswer::Yes(Cover::new()));
    }

    #[test]
    fn triangle() {
        let g = graph(&[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(fvs_decide(&g, 0), FvsAnswer::No);
        assert!(fvs_decide(&g, 1).is_yes());
    }

    #[test]
    fn two_disjoint_triangles() {
        let g = graph(&[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]);
        assert_eq!(fvs_decide(&g, 1), FvsAnswer::No);
        assert!(fvs_decide(&g, 2).is_yes());
    }

    #[test]
    fn k4_needs_two() {
        let g = graph(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(fvs_decide(&g, 1), FvsAnswer::No);
        let FvsAnswer::Yes(c) = fvs_decide(&g, 2) else {
            panic!("expected yes");
        };
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn theta_graph_needs_one() {
        // two vertices joined by three paths of length two
        let g = graph(&[(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2)]);
        assert_eq!(fvs_decide(&g, 0), FvsAnswer::No);
        assert!(fvs_decide(&g, 1).is_yes());
    }

    #[test]
    fn path_state_never_dies() {
        let mut st = FvsState::new(10, 0);
        for i in 1..10 {
            st.insert(Edge::new(i, i + 1).unwrap());
        }
        assert!(!st.is_dead());
        assert_eq!(st.query(0), FvsAnswer::Yes(Cover::new()));
    }

    #[test]
    fn gate_triggers_past_bound_and_absorbs() {
        let mut st = FvsState::new(8, 1);
        let all: Vec<Edge> = (1..=8u32)
            .flat_map(|a| ((a + 1)..=8).map(move |b| Edge::new(a, b).unwrap()))
            .collect();
        for &e in &all[..16] {
            st.insert(e);
        }
        assert!(!st.is_dead());
        st.insert(all[16]);
        assert!(st.is_dead());
        st.insert(all[17]);
        assert!(st.is_dead());
        assert_eq!(st.query(1), FvsAnswer::No);
    }
}
