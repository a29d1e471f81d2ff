//! Buss kernelization for parameterized vertex cover and exact extraction
//! from the kernel by a bounded search tree.

use crate::graph::Graph;
use crate::types::{Cover, VcAnswer, VertexId};

/// A reduced instance: every vertex of `graph` has degree in `[1, budget]`,
/// and `forced` lists the vertices already committed to the cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelInstance {
    pub graph: Graph,
    pub budget: u32,
    pub forced: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelOutcome {
    Kernel(KernelInstance),
    No,
}

/// Applies the high-degree rule (a vertex of degree above the remaining
/// budget joins the cover) and the isolated-vertex rule to a fixpoint, then
/// rejects when more than `budget^2` edges survive.
///
/// Tie-breaking is by smallest vertex id.
pub fn kernelize(g: &Graph, k: u32) -> KernelOutcome {
    let mut graph = g.clone();
    let mut budget = k;
    let mut forced = Vec::new();
    loop {
        while let Some(v) = high_degree(&graph, budget) {
            if budget == 0 {
                return KernelOutcome::No;
            }
            graph.remove_vertex(v);
            forced.push(v);
            budget -= 1;
        }
        let isolated: Vec<VertexId> = graph.vertices().filter(|&v| graph.degree(v) == 0).collect();
        if isolated.is_empty() {
            break;
        }
        for v in isolated {
            graph.remove_vertex(v);
        }
    }
    let b = budget as usize;
    if graph.edge_count() > b * b {
        return KernelOutcome::No;
    }
    debug_assert!(graph.max_degree() <= b);
    debug_assert!(graph.vertex_count() <= 2 * graph.edge_count());
    KernelOutcome::Kernel(KernelInstance {
        graph,
        budget,
        forced,
    })
}

fn high_degree(g: &Graph, budget: u32) -> Option<VertexId> {
    g.vertices().find(|&v| g.degree(v) > budget as usize)
}

/// Exact decision on a kernel: branches on the two endpoints of the smallest
/// uncovered edge, smaller endpoint first, to depth `budget`.
pub fn solve_kernel(kern: &KernelInstance) -> VcAnswer {
    let mut chosen = Vec::new();
    if branch(&kern.graph, kern.budget, &mut chosen) {
        let cover: Cover = kern.forced.iter().chain(chosen.iter()).copied().collect();
        VcAnswer::Yes(cover)
    } else {
        VcAnswer::No
    }
}

fn branch(g: &Graph, budget: u32, chosen: &mut Vec<VertexId>) -> bool {
    let Some(e) = g.edges().next() else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    for w in e.endpoints() {
        let mut rest = g.clone();
        rest.remove_vertex(w);
        chosen.push(w);
        if branch(&rest, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Decides whether `g` has a vertex cover of size at most `k`. A `Yes`
/// certificate is checked against every edge of `g` before it is returned.
pub fn vc_decide(g: &Graph, k: u32) -> VcAnswer {
    let answer = match kernelize(g, k) {
        KernelOutcome::No => VcAnswer::No,
        KernelOutcome::Kernel(kern) => solve_kernel(&kern),
    };
    if let VcAnswer::Yes(cover) = &answer {
        assert!(cover.len() <= k as usize, "certificate exceeds budget");
        assert!(g.is_covered_by(cover), "certificate misses an edge");
    }
    answer
}
