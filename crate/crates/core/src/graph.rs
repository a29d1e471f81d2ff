//! Explicit adjacency-set graphs. [`Graph`] is the working representation for
//! kernels, gadgets and oracles; [`ShadowGraph`] replays a stream exactly and
//! serves as ground truth in tests and in the CLI's certificate checks. Neither
//! counts toward the space of a streaming algorithm.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::types::{Edge, Op, StreamUpdate, VertexId};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
    edges: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        let mut g = Graph::new();
        for e in edges {
            g.add_edge(e);
        }
        g
    }

    /// Adds `v` with no incident edges. No-op when already present.
    pub fn add_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    /// Returns false when the edge was already present.
    pub fn add_edge(&mut self, e: Edge) -> bool {
        let fresh = self.adj.entry(e.u()).or_default().insert(e.v());
        if fresh {
            self.adj.entry(e.v()).or_default().insert(e.u());
            self.edges += 1;
        }
        fresh
    }

    /// Returns false when the edge was absent. Endpoints stay in the vertex set.
    pub fn remove_edge(&mut self, e: Edge) -> bool {
        let present = self.adj.get_mut(&e.u()).is_some_and(|s| s.remove(&e.v()));
        if present {
            if let Some(s) = self.adj.get_mut(&e.v()) {
                s.remove(&e.u());
            }
            self.edges -= 1;
        }
        present
    }

    /// Removes `v` together with its incident edges.
    pub fn remove_vertex(&mut self, v: VertexId) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for w in &nbrs {
                if let Some(s) = self.adj.get_mut(w) {
                    s.remove(&v);
                }
            }
            self.edges -= nbrs.len();
        }
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.adj.get(&e.u()).is_some_and(|s| s.contains(&e.v()))
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flat_map(|s| s.iter().copied())
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().flat_map(|(&u, nbrs)| {
            nbrs.range(VertexId(u.0 + 1)..)
                .map(move |&v| Edge::new(u.0, v.0).expect("u < v"))
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Whether every edge has an endpoint in `cover`.
    pub fn is_covered_by(&self, cover: &BTreeSet<VertexId>) -> bool {
        self.edges()
            .all(|e| cover.contains(&e.u()) || cover.contains(&e.v()))
    }

    /// Whether the graph minus `removed` has no cycle.
    pub fn is_acyclic_without(&self, removed: &BTreeSet<VertexId>) -> bool {
        let ids: BTreeMap<VertexId, usize> = self
            .vertices()
            .filter(|v| !removed.contains(v))
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut uf = UnionFind::new(ids.len());
        self.edges()
            .filter(|e| !removed.contains(&e.u()) && !removed.contains(&e.v()))
            .all(|e| uf.union(ids[&e.u()], ids[&e.v()]))
    }
}

/// Disjoint sets with path halving; `union` reports whether the sets differed.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Exact replay of a stream over the vertex universe `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowGraph {
    n: u32,
    graph: Graph,
    clock: u64,
}

impl ShadowGraph {
    pub fn new(n: u32) -> Self {
        ShadowGraph {
            n,
            graph: Graph::new(),
            clock: 0,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of updates applied so far.
    pub fn clock(&self) -> u64 {
        self.clock
    }

    /// Applies one update, rejecting deletes of absent edges and inserts of
    /// present ones. A rejected update leaves the graph unchanged.
    pub fn apply_update(&mut self, up: StreamUpdate) -> Result<()> {
        let at = self.clock + 1;
        up.edge.check_range(self.n)?;
        match up.op {
            Op::Insert if self.graph.contains_edge(up.edge) => {
                return Err(Error::invalid(
                    at,
                    format!("insert of present edge {}", up.edge),
                ))
            }
            Op::Delete if !self.graph.contains_edge(up.edge) => {
                return Err(Error::invalid(
                    at,
                    format!("delete of absent edge {}", up.edge),
                ))
            }
            Op::Insert => {
                self.graph.add_edge(up.edge);
            }
            Op::Delete => {
                self.graph.remove_edge(up.edge);
            }
        }
        self.clock = at;
        Ok(())
    }

    /// Applies an update with set semantics, never failing. Used when replaying
    /// streams that were not validated.
    pub fn apply_lenient(&mut self, up: StreamUpdate) {
        match up.op {
            Op::Insert => self.graph.add_edge(up.edge),
            Op::Delete => self.graph.remove_edge(up.edge),
        };
        self.clock += 1;
    }

    /// Live edge count `m'`.
    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.graph.degree(v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.graph.contains_edge(e)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.graph.edges()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b).unwrap()
    }

    #[test]
    fn insert_then_delete() {
        let mut g = ShadowGraph::new(3);
        g.apply_update(StreamUpdate::insert(e(1, 2))).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degree(VertexId(1)), 1);
        assert_eq!(g.degree(VertexId(2)), 1);
        g.apply_update(StreamUpdate::delete(e(1, 2))).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.edges().count(), 0);
    }

    #[test]
    fn rejects_invalid_updates() {
        let mut g = ShadowGraph::new(3);
        assert!(matches!(
            g.apply_update(StreamUpdate::delete(e(1, 2))),
            Err(Error::InvalidStream { at: 1, .. })
        ));
        g.apply_update(StreamUpdate::insert(e(1, 2))).unwrap();
        assert!(matches!(
            g.apply_update(StreamUpdate::insert(e(2, 1))),
            Err(Error::InvalidStream { at: 2, .. })
        ));
        assert!(matches!(
            g.apply_update(StreamUpdate::insert(e(1, 4))),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
    }

    #[test]
    fn random_replay_counts_live_edges() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = 12;
        let mut g = ShadowGraph::new(n);
        let mut live: BTreeSet<Edge> = BTreeSet::new();
        let (mut inserts, mut deletes) = (0i64, 0i64);
        for _ in 0..1000 {
            let a = rng.gen_range(1..=n);
            let b = rng.gen_range(1..=n);
            if a == b {
                continue;
            }
            let edge = e(a, b);
            let up = if live.contains(&edge) {
                deletes += 1;
                live.remove(&edge);
                StreamUpdate::delete(edge)
            } else {
                inserts += 1;
                live.insert(edge);
                StreamUpdate::insert(edge)
            };
            g.apply_update(up).unwrap();
            assert_eq!(g.edges().collect::<BTreeSet<_>>(), live);
        }
        assert_eq!(g.edge_count() as i64, inserts - deletes);
    }

    #[test]
    fn cover_and_acyclicity_checks() {
        let tri = Graph::from_edges([e(1, 2), e(2, 3), e(1, 3)]);
        assert!(!tri.is_covered_by(&[VertexId(1)].into()));
        assert!(tri.is_covered_by(&[VertexId(1), VertexId(2)].into()));
        assert!(!tri.is_acyclic_without(&BTreeSet::new()));
        assert!(tri.is_acyclic_without(&[VertexId(3)].into()));
    }

    #[test]
    fn remove_vertex_drops_incident_edges() {
        let mut g = Graph::from_edges([e(1, 2), e(1, 3), e(2, 3)]);
        g.remove_vertex(VertexId(1));
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![e(2, 3)]);
        assert!(!g.contains_vertex(VertexId(1)));
    }
}
