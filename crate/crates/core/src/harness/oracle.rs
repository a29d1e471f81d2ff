//! Brute-force ground truth. These work on the raw graph with no
//! kernelization and no sketches.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::fvs::FvsAnswer;
use crate::graph::Graph;
use crate::types::{Cover, Edge, VcAnswer, VertexId};

/// Largest graph the vertex cover oracle accepts.
pub const VC_MAX_VERTICES: usize = 64;
/// Deepest search the vertex cover oracle runs.
pub const VC_MAX_DEPTH: u32 = 16;
/// Largest graph the feedback vertex set oracle enumerates.
pub const FVS_MAX_VERTICES: usize = 20;

fn cover_within(edges: &[Edge], depth: u32, chosen: &mut Vec<VertexId>) -> bool {
    let Some(first) = edges.first() else {
        return true;
    };
    if depth == 0 {
        return false;
    }
    for w in first.endpoints() {
        let rest: Vec<Edge> = edges.iter().copied().filter(|e| !e.touches(w)).collect();
        chosen.push(w);
        if cover_within(&rest, depth - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Decides vertex cover of size at most `k` by two-way branching on an
/// uncovered edge, trying budgets `0, 1, …, k` so that a `Yes` carries a
/// minimum cover.
pub fn oracle_vc(g: &Graph, k: u32) -> Result<VcAnswer> {
    if g.vertex_count() > VC_MAX_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "{} vertices exceed {VC_MAX_VERTICES}",
            g.vertex_count()
        )));
    }
    let edges: Vec<Edge> = g.edges().collect();
    for depth in 0..=k {
        if depth > VC_MAX_DEPTH {
            return Err(Error::BudgetExceeded(format!(
                "search depth {depth} exceeds {VC_MAX_DEPTH}"
            )));
        }
        let mut chosen = Vec::new();
        if cover_within(&edges, depth, &mut chosen) {
            return Ok(VcAnswer::Yes(chosen.into_iter().collect()));
        }
    }
    Ok(VcAnswer::No)
}

/// Size of a minimum vertex cover.
pub fn min_vertex_cover(g: &Graph) -> Result<usize> {
    let bound = g.vertex_count().min(VC_MAX_DEPTH as usize + 1) as u32;
    match oracle_vc(g, bound)? {
        VcAnswer::Yes(c) => Ok(c.len()),
        _ => Err(Error::BudgetExceeded(
            "minimum cover beyond search depth".into(),
        )),
    }
}

/// Decides feedback vertex set of size at most `k` by enumerating vertex
/// subsets in increasing size.
pub fn oracle_fvs(g: &Graph, k: u32) -> Result<FvsAnswer> {
    let verts: Vec<VertexId> = g.vertices().collect();
    if verts.len() > FVS_MAX_VERTICES {
        return Err(Error::BudgetExceeded(format!(
            "{} vertices exceed {FVS_MAX_VERTICES}",
            verts.len()
        )));
    }
    for size in 0..=(k as usize).min(verts.len()) {
        for pick in verts.iter().copied().combinations(size) {
            let set: Cover = pick.into_iter().collect();
            if g.is_acyclic_without(&set) {
                return Ok(FvsAnswer::Yes(set));
            }
        }
    }
    Ok(FvsAnswer::No)
}

pub fn min_fvs(g: &Graph) -> Result<usize> {
    match oracle_fvs(g, g.vertex_count() as u32)? {
        FvsAnswer::Yes(c) => Ok(c.len()),
        FvsAnswer::No => unreachable!("removing every vertex leaves no cycle"),
    }
}
