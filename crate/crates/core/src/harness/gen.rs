//! Instance generators. Every generator takes the random source explicitly so
//! that outputs are reproducible from a seed.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::{IteratorRandom, SliceRandom};
use rand::Rng;

use crate::graph::Graph;
use crate::types::{Cover, Edge, StreamUpdate, VertexId};

fn edge(a: u32, b: u32) -> Edge {
    Edge::new(a, b).expect("generator never builds self-loops")
}

/// All edges of `K_n` in canonical order.
pub fn complete_edges(n: u32) -> Vec<Edge> {
    (1..=n)
        .flat_map(|a| ((a + 1)..=n).map(move |b| edge(a, b)))
        .collect()
}

/// Erdős–Rényi `G(n, p)`; every vertex of `[1, n]` is present.
pub fn gnp<R: Rng>(rng: &mut R, n: u32, p: f64) -> Graph {
    let mut g = Graph::new();
    for v in 1..=n {
        g.add_vertex(VertexId(v));
    }
    for e in complete_edges(n) {
        if rng.gen_bool(p) {
            g.add_edge(e);
        }
    }
    g
}

/// `m` distinct edges over `[1, n]` in random order.
pub fn insertion_stream<R: Rng>(rng: &mut R, n: u32, m: usize) -> Vec<Edge> {
    let mut all = complete_edges(n);
    all.shuffle(rng);
    all.truncate(m);
    all
}

/// Valid dynamic stream over `[1, n]`: each step deletes a live edge with
/// probability `churn` (always when `max_live` edges are live) and inserts an
/// absent edge otherwise.
pub fn dynamic_stream<R: Rng>(
    rng: &mut R,
    n: u32,
    length: usize,
    max_live: usize,
    churn: f64,
) -> Vec<StreamUpdate> {
    let universe = complete_edges(n);
    let mut live: Vec<Edge> = Vec::new();
    let mut present = BTreeSet::new();
    let mut out = Vec::with_capacity(length);
    for _ in 0..length {
        let full = live.len() >= max_live.min(universe.len());
        if !live.is_empty() && (full || rng.gen_bool(churn)) {
            let e = live.swap_remove(rng.gen_range(0..live.len()));
            present.remove(&e);
            out.push(StreamUpdate::delete(e));
        } else if !full {
            let e = loop {
                let e = *universe.choose(rng).expect("n >= 2");
                if !present.contains(&e) {
                    break e;
                }
            };
            live.push(e);
            present.insert(e);
            out.push(StreamUpdate::insert(e));
        }
    }
    out
}

/// Dynamic stream together with the planted cover it respects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromisedStream {
    pub cover: Cover,
    pub updates: Vec<StreamUpdate>,
}

/// Dynamic stream whose every prefix is covered by a planted set of `k`
/// vertices. Each step deletes with probability `churn`, choosing the oldest
/// live edge half of the time (these tend to be matching edges) and a uniform
/// live edge otherwise; other steps insert a uniform absent edge touching the
/// planted set.
pub fn promised_stream<R: Rng>(
    rng: &mut R,
    n: u32,
    k: u32,
    length: usize,
    churn: f64,
) -> PromisedStream {
    assert!(k >= 1 && k < n, "need 1 <= k < n");
    let cover: Cover = (1..=n)
        .map(VertexId)
        .choose_multiple(rng, k as usize)
        .into_iter()
        .collect();
    let candidates: Vec<Edge> = complete_edges(n)
        .into_iter()
        .filter(|e| cover.contains(&e.u()) || cover.contains(&e.v()))
        .collect();
    let mut live: VecDeque<Edge> = VecDeque::new();
    let mut present = BTreeSet::new();
    let mut updates = Vec::with_capacity(length);
    for _ in 0..length {
        let saturated = live.len() == candidates.len();
        if !live.is_empty() && (saturated || rng.gen_bool(churn)) {
            let at = if rng.gen_bool(0.5) {
                0
            } else {
                rng.gen_range(0..live.len())
            };
            let e = live.remove(at).expect("index in range");
            present.remove(&e);
            updates.push(StreamUpdate::delete(e));
        } else {
            let e = loop {
                let e = *candidates.choose(rng).expect("k >= 1");
                if !present.contains(&e) {
                    break e;
                }
            };
            live.push_back(e);
            present.insert(e);
            updates.push(StreamUpdate::insert(e));
        }
    }
    PromisedStream { cover, updates }
}

/// Vertex ids of the index gadget for parameter `k` (1-based `i`).
pub mod index_ids {
    pub fn v(_k: u32, i: u32) -> u32 {
        i
    }
    pub fn v1(k: u32, i: u32) -> u32 {
        k + i
    }
    pub fn v2(k: u32, i: u32) -> u32 {
        2 * k + i
    }
    pub fn w(k: u32, j: u32) -> u32 {
        3 * k + j
    }
    pub fn w1(k: u32, j: u32) -> u32 {
        4 * k + j
    }
    pub fn w2(k: u32, j: u32) -> u32 {
        5 * k + j
    }
}

/// Graph on `6k` vertices from a `k × k` bit matrix and a position `(I, J)`:
/// edges `(v_i, w_j)` wherever `X[i][j]` is set, and two pendant edges on
/// every `v_i` with `i ≠ I` and every `w_j` with `j ≠ J`. Its minimum vertex
/// cover has size `2k − 2 + X[I][J]`.
pub fn index_gadget(x: &[Vec<bool>], big_i: u32, big_j: u32) -> Graph {
    use index_ids::*;
    let k = x.len() as u32;
    assert!((1..=k).contains(&big_i) && (1..=k).contains(&big_j));
    let mut g = Graph::new();
    for id in 1..=6 * k {
        g.add_vertex(VertexId(id));
    }
    for i in 1..=k {
        assert_eq!(x[i as usize - 1].len(), k as usize, "matrix must be square");
        for j in 1..=k {
            if x[i as usize - 1][j as usize - 1] {
                g.add_edge(edge(v(k, i), w(k, j)));
            }
        }
    }
    for i in (1..=k).filter(|&i| i != big_i) {
        g.add_edge(edge(v(k, i), v1(k, i)));
        g.add_edge(edge(v(k, i), v2(k, i)));
    }
    for j in (1..=k).filter(|&j| j != big_j) {
        g.add_edge(edge(w(k, j), w1(k, j)));
        g.add_edge(edge(w(k, j), w2(k, j)));
    }
    g
}

pub fn random_bit_matrix<R: Rng>(rng: &mut R, k: u32) -> Vec<Vec<bool>> {
    (0..k)
        .map(|_| (0..k).map(|_| rng.gen()).collect())
        .collect()
}

/// Id of vertex `letter` (0 for `a` through 7 for `h`) of block `i`.
pub fn disjointness_id(i: u32, letter: u32) -> u32 {
    8 * (i - 1) + letter + 1
}

/// Graph on `8n` vertices that is a path when `x` and `y` are disjoint and
/// has a cycle otherwise.
pub fn disjointness_gadget(x: &[bool], y: &[bool]) -> Graph {
    assert_eq!(x.len(), y.len(), "strings must have equal length");
    let n = x.len() as u32;
    let id = |i: u32, c: char| disjointness_id(i, c as u32 - 'a' as u32);
    let mut g = Graph::new();
    let mut add = |a: u32, b: u32| {
        g.add_edge(edge(a.min(b), a.max(b)));
    };
    for i in 1..=n {
        add(id(i, 'b'), id(i, 'g'));
        add(id(i, 'c'), id(i, 'e'));
        add(id(i, 'd'), id(i, 'f'));
        if i < n {
            add(id(i, 'h'), id(i + 1, 'a'));
        }
        if x[i as usize - 1] {
            add(id(i, 'a'), id(i, 'b'));
            add(id(i, 'c'), id(i, 'd'));
        } else {
            add(id(i, 'a'), id(i, 'c'));
            add(id(i, 'b'), id(i, 'd'));
        }
        if y[i as usize - 1] {
            add(id(i, 'f'), id(i, 'e'));
            add(id(i, 'g'), id(i, 'h'));
        } else {
            add(id(i, 'f'), id(i, 'h'));
            add(id(i, 'e'), id(i, 'g'));
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ShadowGraph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn dynamic_streams_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let ups = dynamic_stream(&mut rng, 12, 300, 20, 0.4);
            let mut sh = ShadowGraph::new(12);
            for up in ups {
                sh.apply_update(up).unwrap();
                assert!(sh.edge_count() <= 20);
            }
        }
    }

    #[test]
    fn promised_streams_stay_covered() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let s = promised_stream(&mut rng, 15, 3, 200, 0.3);
            assert_eq!(s.cover.len(), 3);
            let mut sh = ShadowGraph::new(15);
            for up in s.updates {
                sh.apply_update(up).unwrap();
                assert!(sh.graph().is_covered_by(&s.cover));
            }
        }
    }

    #[test]
    fn churn_zero_is_insertion_only() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = promised_stream(&mut rng, 10, 2, 15, 0.0);
        assert!(s.updates.iter().all(|u| u.op == crate::types::Op::Insert));
    }

    #[test]
    fn disjoint_bits_give_a_path() {
        let g = disjointness_gadget(&[false], &[false]);
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 7);
        assert!(g.is_acyclic_without(&Cover::new()));
        let g = disjointness_gadget(&[true], &[true]);
        assert!(!g.is_acyclic_without(&Cover::new()));
    }

    #[test]
    fn index_gadget_shape() {
        let x = vec![vec![true, false], vec![false, true]];
        let g = index_gadget(&x, 1, 2);
        assert_eq!(g.vertex_count(), 12);
        // two Alice edges plus two pendants on v_2 and two on w_1
        assert_eq!(g.edge_count(), 6);
    }
}
