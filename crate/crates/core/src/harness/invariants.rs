//! Audits a [`MatchingView`] against the true graph.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::ShadowGraph;
use crate::pdpsa::MatchingView;
use crate::types::{canonical, Edge, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    /// A live edge in neither endpoint's sketch.
    Unsketched(Edge),
    /// Both endpoints matched, and sketch membership disagrees with the
    /// timestamp rule.
    Timestamp(Edge),
    /// Both endpoints matched, and "in both sketches" disagrees with `T`.
    Dictionary(Edge),
    /// A live edge with both endpoints exposed.
    NotMaximal(Edge),
    /// A matching edge that is not live, or a vertex matched twice.
    BadMatching(Edge),
    /// A `T` entry that is not live or has an exposed endpoint.
    StaleDictEntry(Edge),
    /// A sketched edge that is not live.
    PhantomEdge(Edge),
    /// A sketch or timestamp owned by an exposed vertex.
    StraySketch(VertexId),
    /// A matched vertex without a sketch or timestamp.
    MissingSketch(VertexId),
    /// Sketch support counter differs from the mirrored neighbourhood size.
    SupportMismatch(VertexId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Unsketched(e) => write!(f, "edge {e} is in no sketch"),
            Violation::Timestamp(e) => write!(f, "edge {e} breaks the timestamp rule"),
            Violation::Dictionary(e) => write!(f, "edge {e} disagrees with T"),
            Violation::NotMaximal(e) => write!(f, "edge {e} has both endpoints exposed"),
            Violation::BadMatching(e) => write!(f, "matching edge {e} is invalid"),
            Violation::StaleDictEntry(e) => write!(f, "T holds stale edge {e}"),
            Violation::PhantomEdge(e) => write!(f, "sketched edge {e} is not live"),
            Violation::StraySketch(v) => write!(f, "exposed vertex {v} owns state"),
            Violation::MissingSketch(v) => write!(f, "matched vertex {v} has no sketch"),
            Violation::SupportMismatch(v) => write!(f, "support counter of {v} is off"),
        }
    }
}

/// Checks the three bookkeeping invariants, maximality of the matching, and
/// internal consistency. Returns every violation found.
pub fn check_invariants(view: &MatchingView, g: &ShadowGraph) -> Result<(), Vec<Violation>> {
    let mut bad = BTreeSet::new();
    let mut matched = BTreeSet::new();
    for &e in &view.matching {
        if !g.contains_edge(e) {
            bad.insert(Violation::BadMatching(e));
        }
        for w in e.endpoints() {
            if !matched.insert(w) {
                bad.insert(Violation::BadMatching(e));
            }
        }
    }
    for &w in &matched {
        if !view.sketched.contains_key(&w) || !view.timestamps.contains_key(&w) {
            bad.insert(Violation::MissingSketch(w));
        }
    }
    for &w in view.sketched.keys().chain(view.timestamps.keys()) {
        if !matched.contains(&w) {
            bad.insert(Violation::StraySketch(w));
        }
    }
    for (&w, nbrs) in &view.sketched {
        if view.support.get(&w).copied() != Some(nbrs.len() as i64) {
            bad.insert(Violation::SupportMismatch(w));
        }
        for &z in nbrs {
            match canonical(w, z) {
                Ok(e) if g.contains_edge(e) => {}
                Ok(e) => {
                    bad.insert(Violation::PhantomEdge(e));
                }
                Err(_) => {
                    bad.insert(Violation::StraySketch(w));
                }
            }
        }
    }
    for &e in &view.dict {
        if !g.contains_edge(e) || !matched.contains(&e.u()) || !matched.contains(&e.v()) {
            bad.insert(Violation::StaleDictEntry(e));
        }
    }
    let holds = |owner: VertexId, other: VertexId| {
        view.sketched
            .get(&owner)
            .is_some_and(|s| s.contains(&other))
    };
    for e in g.edges() {
        let (u, v) = (e.u(), e.v());
        let (in_u, in_v) = (holds(u, v), holds(v, u));
        if !in_u && !in_v {
            bad.insert(Violation::Unsketched(e));
        }
        let (mu, mv) = (matched.contains(&u), matched.contains(&v));
        if !mu && !mv {
            bad.insert(Violation::NotMaximal(e));
        }
        if mu && mv {
            let in_t = view.dict.contains(&e);
            if (in_u && in_v) != in_t {
                bad.insert(Violation::Dictionary(e));
            }
            let (tu, tv) = (view.timestamps.get(&u), view.timestamps.get(&v));
            if let (Some(tu), Some(tv)) = (tu, tv) {
                // u missing from N'_v exactly when u is older and e is not in T
                if !in_v != (tu < tv && !in_t) || !in_u != (tv < tu && !in_t) {
                    bad.insert(Violation::Timestamp(e));
                }
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad.into_iter().collect())
    }
}
