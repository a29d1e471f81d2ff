//! Maximal matching maintenance over a dynamic edge stream under the promise
//! that every prefix has a vertex cover of size at most `k`.
//!
//! Every matched vertex `u` owns a sample-recovery sketch `S_u` of the edges
//! incident on it that were routed to it (its sketched neighbourhood `N'_u`).
//! A dictionary `T` records edges present in both endpoints' sketches, and
//! matching timestamps decide which sketch owns an edge otherwise. After each
//! update the following hold for every live edge `(u, v)`:
//!
//! 1. `v ∈ N'_u` or `u ∈ N'_v`;
//! 2. if both endpoints are matched: `u ∉ N'_v` iff `t_u < t_v` and `(u,v) ∉ T`;
//! 3. if both endpoints are matched: `(u,v)` is in both sketches iff `(u,v) ∈ T`.
//!
//! Together with maximality these let a deleted matching edge be repaired
//! from the endpoints' sketches alone.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kernel::vc_decide;
use crate::sketch::{field, SampleOutcome, SampleRecovery, SketchParams};
use crate::types::{canonical, Config, Edge, Op, StreamUpdate, VcAnswer, VertexId};

/// Constant `C` of the space bound `words <= C * k^2 * L^4`, `L = log2(n/delta)`,
/// checked against [`SpaceCensus::words`]. At most `2k` sketches each hold
/// about `64 k L^2` grid words and `256 L^2` sampler words, so the total is
/// below `640 k^2 L^2 <= 16 k^2 L^4` once `L^2 >= 40`, which holds for every
/// `n >= 1` at `delta <= 0.01`.
pub const CENSUS_CONSTANT: f64 = 16.0;

/// `C * max(k,1)^2 * log2(n/delta)^4`.
pub fn census_bound(cfg: &Config) -> f64 {
    let k = cfg.k.max(1) as f64;
    CENSUS_CONSTANT * k * k * cfg.log_term().powi(4)
}

/// How the low/high degree test measures a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeMode {
    /// Use the exact support counter of the vertex's own sketch, `|N'_u|`.
    #[default]
    Sketched,
    /// Keep a true degree counter for every vertex (`Θ(n)` extra words).
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PdpsaOptions {
    pub degree_mode: DegreeMode,
    /// Mirror every sketch's support in plain sets so that
    /// [`MatchingState::view`] can be audited. Not part of the space census.
    pub audit: bool,
}

impl PdpsaOptions {
    pub fn audited() -> Self {
        PdpsaOptions {
            audit: true,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PromiseReport {
    Ok,
    Violated { at: u64 },
}

/// Counters of procedure invocations and failure events.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EventCounts {
    pub insertions: u64,
    pub deletions: u64,
    pub matchings: u64,
    pub rematches: u64,
    pub rematch_low: u64,
    pub rematch_high: u64,
    pub rematched: u64,
    pub delete_neighborhoods: u64,
    pub announcements: u64,
    pub sketch_fails: u64,
    pub rematch_misses: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SpaceCensus {
    pub sketches: usize,
    pub dict: usize,
    pub matching: usize,
    pub sketch_words: usize,
    pub words: usize,
}

/// Plain-data snapshot of the bookkeeping, with sketch contents taken from the
/// audit mirror. Consumed by the invariant checker.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatchingView {
    pub matching: BTreeSet<Edge>,
    pub timestamps: BTreeMap<VertexId, u64>,
    pub dict: BTreeSet<Edge>,
    pub sketched: BTreeMap<VertexId, BTreeSet<VertexId>>,
    pub support: BTreeMap<VertexId, i64>,
}

#[derive(Debug, Clone)]
pub struct MatchingState {
    cfg: Config,
    options: PdpsaOptions,
    params: SketchParams,
    x: usize,
    y: usize,
    clock: u64,
    mate: BTreeMap<VertexId, VertexId>,
    ts: BTreeMap<VertexId, u64>,
    sketches: BTreeMap<VertexId, SampleRecovery>,
    dict: BTreeSet<Edge>,
    degrees: Option<Vec<u32>>,
    violated: Option<u64>,
    failure: Option<Error>,
    events: EventCounts,
    mirror: Option<BTreeMap<VertexId, BTreeSet<VertexId>>>,
    sketch_serial: u64,
}

impl MatchingState {
    pub fn new(cfg: Config, options: PdpsaOptions) -> Result<Self> {
        cfg.validate()?;
        let degrees = match options.degree_mode {
            DegreeMode::Exact => Some(vec![0; cfg.n as usize + 1]),
            DegreeMode::Sketched => None,
        };
        Ok(MatchingState {
            params: SketchParams::neighborhood(&cfg),
            x: cfg.x(),
            y: cfg.y(),
            cfg,
            options,
            clock: 0,
            mate: BTreeMap::new(),
            ts: BTreeMap::new(),
            sketches: BTreeMap::new(),
            dict: BTreeSet::new(),
            degrees,
            violated: None,
            failure: None,
            events: EventCounts::default(),
            mirror: options.audit.then(BTreeMap::new),
            sketch_serial: 0,
        })
    }

    pub fn options(&self) -> PdpsaOptions {
        self.options
    }

    pub fn config(&self) -> &Config {
        &self.cfg
    }

    /// Degree threshold `x` (also the sketch capacity).
    pub fn threshold(&self) -> usize {
        self.x
    }

    pub fn clock(&self) -> u64 {
        self.clock
    }

    pub fn events(&self) -> EventCounts {
        self.events
    }

    pub fn promise(&self) -> PromiseReport {
        match self.violated {
            Some(at) => PromiseReport::Violated { at },
            None => PromiseReport::Ok,
        }
    }

    pub fn failure(&self) -> Option<&Error> {
        self.failure.as_ref()
    }

    pub fn is_matched(&self, v: VertexId) -> bool {
        self.mate.contains_key(&v)
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.mate.get(&v).copied()
    }

    pub fn matching(&self) -> BTreeSet<Edge> {
        self.mate
            .iter()
            .filter(|(u, v)| u < v)
            .map(|(&u, &v)| canonical(u, v).expect("distinct mates"))
            .collect()
    }

    pub fn matching_len(&self) -> usize {
        self.mate.len() / 2
    }

    pub fn timestamp(&self, v: VertexId) -> Option<u64> {
        self.ts.get(&v).copied()
    }

    pub fn dict(&self) -> &BTreeSet<Edge> {
        &self.dict
    }

    pub fn sketch(&self, v: VertexId) -> Option<&SampleRecovery> {
        self.sketches.get(&v)
    }

    /// `|N'_v|`, zero for vertices without a sketch.
    pub fn sup(&self, v: VertexId) -> i64 {
        self.sketches.get(&v).map_or(0, SampleRecovery::support)
    }

    pub fn census(&self) -> SpaceCensus {
        let sketch_words: usize = self.sketches.values().map(SampleRecovery::words).sum();
        let words = sketch_words
            + 2 * self.dict.len()
            + 2 * self.mate.len()
            + 2 * self.ts.len()
            + self.degrees.as_ref().map_or(0, Vec::len)
            + 4;
        SpaceCensus {
            sketches: self.sketches.len(),
            dict: self.dict.len(),
            matching: self.matching_len(),
            sketch_words,
            words,
        }
    }

    /// Snapshot for auditing; `None` unless built with `audit` enabled.
    pub fn view(&self) -> Option<MatchingView> {
        let mirror = self.mirror.as_ref()?;
        Some(MatchingView {
            matching: self.matching(),
            timestamps: self.ts.clone(),
            dict: self.dict.clone(),
            sketched: mirror.clone(),
            support: self
                .sketches
                .iter()
                .map(|(&v, s)| (v, s.support()))
                .collect(),
        })
    }

    pub fn apply(&mut self, up: StreamUpdate) -> Result<()> {
        match up.op {
            Op::Insert => self.insertion(up.edge),
            Op::Delete => self.deletion(up.edge),
        }
    }

    /// Processes the insertion of `e` at the next timestamp.
    pub fn insertion(&mut self, e: Edge) -> Result<()> {
        self.guard()?;
        self.clock += 1;
        let t = self.clock;
        self.events.insertions += 1;
        self.bump_degrees(e, 1);
        if !self.is_matched(e.u()) && !self.is_matched(e.v()) {
            self.add_edge_to_matching(e, t);
        } else {
            self.insert_to_ds(e);
        }
        self.finish(t)
    }

    /// Processes the deletion of live edge `e` at the next timestamp.
    pub fn deletion(&mut self, e: Edge) -> Result<()> {
        self.guard()?;
        self.clock += 1;
        let t = self.clock;
        self.events.deletions += 1;
        self.bump_degrees(e, -1);
        if let Err(err) = self.process_deletion(e, t) {
            match err {
                Error::SketchFail { .. } => self.events.sketch_fails += 1,
                Error::RematchMiss { .. } => self.events.rematch_misses += 1,
                _ => {}
            }
            self.failure = Some(err.clone());
            return Err(err);
        }
        self.finish(t)
    }

    fn process_deletion(&mut self, e: Edge, t: u64) -> Result<()> {
        if self.mate(e.u()) == Some(e.v()) {
            self.rematch(e, t)?;
        } else {
            self.delete_from_ds(e);
        }
        self.announce_neighborhood(e.u())?;
        self.announce_neighborhood(e.v())
    }

    fn guard(&self) -> Result<()> {
        if let Some(f) = &self.failure {
            return Err(f.clone());
        }
        if let Some(at) = self.violated {
            return Err(Error::PromiseViolation { at });
        }
        Ok(())
    }

    fn finish(&mut self, t: u64) -> Result<()> {
        if self.matching_len() > self.cfg.k as usize {
            self.violated = Some(t);
            return Err(Error::PromiseViolation { at: t });
        }
        Ok(())
    }

    fn bump_degrees(&mut self, e: Edge, delta: i32) {
        if let Some(d) = &mut self.degrees {
            for w in e.endpoints() {
                let slot = &mut d[w.0 as usize];
                *slot = slot.saturating_add_signed(delta);
            }
        }
    }

    fn degree_of(&self, w: VertexId) -> usize {
        match &self.degrees {
            Some(d) => d[w.0 as usize] as usize,
            None => self.sup(w).max(0) as usize,
        }
    }

    fn sketch_update(&mut self, owner: VertexId, partner: VertexId, delta: i64) {
        self.sketches
            .get_mut(&owner)
            .unwrap_or_else(|| panic!("vertex {owner} has no sketch"))
            .update(partner.0 as u64, delta);
        if let Some(m) = &mut self.mirror {
            let set = m.entry(owner).or_default();
            if delta > 0 {
                set.insert(partner);
            } else {
                set.remove(&partner);
            }
        }
    }

    fn open_sketch(&mut self, owner: VertexId) {
        let seed = field::derive_seed(self.cfg.seed, &[owner.0 as u64, self.sketch_serial]);
        self.sketch_serial += 1;
        self.sketches
            .insert(owner, SampleRecovery::new(self.params, seed));
        if let Some(m) = &mut self.mirror {
            m.insert(owner, BTreeSet::new());
        }
    }

    fn close_sketch(&mut self, owner: VertexId) {
        self.sketches.remove(&owner);
        self.ts.remove(&owner);
        if let Some(m) = &mut self.mirror {
            m.remove(&owner);
        }
    }

    fn recover_neighbors(&self, w: VertexId) -> Result<BTreeSet<VertexId>> {
        let sketch = self
            .sketches
            .get(&w)
            .ok_or(Error::SketchFail { vertex: w })?;
        let support = sketch
            .recover()
            .map_err(|_| Error::SketchFail { vertex: w })?;
        Ok(support.into_iter().map(|i| VertexId(i as u32)).collect())
    }

    /// Adds `e` to the matching and to `T`. An endpoint without a sketch
    /// becomes matched at time `t` with a fresh sketch holding `e`; an
    /// endpoint being rematched keeps its sketch, which already holds `e`,
    /// and its timestamp.
    pub fn add_edge_to_matching(&mut self, e: Edge, t: u64) {
        let (u, v) = (e.u(), e.v());
        self.dict.insert(e);
        self.mate.insert(u, v);
        self.mate.insert(v, u);
        for (z, other) in [(u, v), (v, u)] {
            if !self.sketches.contains_key(&z) {
                self.open_sketch(z);
                self.ts.insert(z, t);
                self.sketch_update(z, other, 1);
            }
        }
        self.events.matchings += 1;
    }

    /// Routes a new non-matching edge to the sketches of its matched
    /// endpoints; into `T` as well when both are matched.
    pub fn insert_to_ds(&mut self, e: Edge) {
        let (u, v) = (e.u(), e.v());
        let (mu, mv) = (self.is_matched(u), self.is_matched(v));
        if mu && mv {
            self.dict.insert(e);
        }
        if mu {
            self.sketch_update(u, v, 1);
        }
        if mv {
            self.sketch_update(v, u, 1);
        }
    }

    /// Removes `e` from exactly the sketches that hold it: both when it is in
    /// `T`, otherwise the older matched endpoint, otherwise the only matched
    /// endpoint.
    pub fn delete_from_ds(&mut self, e: Edge) {
        let (u, v) = (e.u(), e.v());
        if self.dict.remove(&e) {
            self.sketch_update(u, v, -1);
            self.sketch_update(v, u, -1);
            return;
        }
        let (mu, mv) = (self.is_matched(u), self.is_matched(v));
        if mu && mv {
            let (tu, tv) = (self.ts[&u], self.ts[&v]);
            if tu < tv {
                self.sketch_update(u, v, -1);
            } else if tv < tu {
                self.sketch_update(v, u, -1);
            }
        } else if mu {
            self.sketch_update(u, v, -1);
        } else if mv {
            self.sketch_update(v, u, -1);
        }
    }

    /// For a matched low-degree `u`, pushes every sketched edge to a matched
    /// neighbour into that neighbour's sketch and into `T`.
    pub fn announce_neighborhood(&mut self, u: VertexId) -> Result<()> {
        if !self.is_matched(u) || self.degree_of(u) > self.x {
            return Ok(());
        }
        let nbrs = self.recover_neighbors(u)?;
        self.events.announcements += 1;
        for a in nbrs {
            if !self.is_matched(a) {
                continue;
            }
            let e = canonical(u, a)?;
            if self.dict.insert(e) {
                self.sketch_update(a, u, 1);
            }
        }
        Ok(())
    }

    /// Releases `u`, whose neighbours must all be matched: edges in `T` leave
    /// `T`, the rest move into the neighbour's sketch, then `S_u` is dropped.
    pub fn delete_neighborhood(&mut self, u: VertexId) -> Result<()> {
        let nbrs = self.recover_neighbors(u)?;
        self.release(u, &nbrs);
        Ok(())
    }

    fn release(&mut self, u: VertexId, nbrs: &BTreeSet<VertexId>) {
        for &a in nbrs {
            let e = canonical(u, a).expect("no self-loops in sketches");
            if !self.dict.remove(&e) {
                self.sketch_update(a, u, 1);
            }
        }
        self.close_sketch(u);
        if let Some(m) = self.mate.remove(&u) {
            self.mate.remove(&m);
        }
        self.events.delete_neighborhoods += 1;
    }

    /// Repairs the matching after its edge `e` was deleted. Each endpoint, in
    /// increasing id order, is rematched to an exposed neighbour when one is
    /// found and released otherwise.
    pub fn rematch(&mut self, e: Edge, t: u64) -> Result<()> {
        self.delete_from_ds(e);
        self.mate.remove(&e.u());
        self.mate.remove(&e.v());
        self.events.rematches += 1;
        for w in e.endpoints() {
            if self.degree_of(w) <= self.x {
                self.events.rematch_low += 1;
                let nbrs = self.recover_neighbors(w)?;
                match nbrs.iter().copied().find(|&z| !self.is_matched(z)) {
                    Some(z) => {
                        self.add_edge_to_matching(canonical(w, z)?, t);
                        self.events.rematched += 1;
                    }
                    None => self.release(w, &nbrs),
                }
            } else {
                self.events.rematch_high += 1;
                let sketch = &self.sketches[&w];
                let draws = self.y.min(sketch.bank_size());
                let hit = (0..draws).find_map(|i| match sketch.sample(i) {
                    SampleOutcome::Index(z) if !self.is_matched(VertexId(z as u32)) => {
                        Some(VertexId(z as u32))
                    }
                    _ => None,
                });
                match hit {
                    Some(z) => {
                        self.add_edge_to_matching(canonical(w, z)?, t);
                        self.events.rematched += 1;
                    }
                    None => return Err(Error::RematchMiss { vertex: w }),
                }
            }
        }
        Ok(())
    }

    /// Collects up to `k + 1` sketched edges per matched vertex, adds the
    /// matching, and decides the resulting graph. A matched vertex contributing
    /// `k + 1` edges has degree above `k` there, so edges left out are covered
    /// by any answer.
    pub fn query(&self, k: u32) -> Result<VcAnswer> {
        if let Some(f) = &self.failure {
            return Err(f.clone());
        }
        if self.violated.is_some() {
            return Ok(VcAnswer::PromiseViolation);
        }
        let need = k as usize + 1;
        let mut g = Graph::from_edges(self.matching());
        for &w in self.mate.keys() {
            let sketch = &self.sketches[&w];
            let sup = sketch.support().max(0) as usize;
            let picked: BTreeSet<VertexId> = if sup <= self.x {
                self.recover_neighbors(w)?.into_iter().take(need).collect()
            } else {
                let mut got = BTreeSet::new();
                for i in 0..sketch.bank_size() {
                    if got.len() == need {
                        break;
                    }
                    if let SampleOutcome::Index(z) = sketch.sample(i) {
                        got.insert(VertexId(z as u32));
                    }
                }
                if got.len() < need {
                    return Err(Error::SketchFail { vertex: w });
                }
                got
            };
            for z in picked {
                g.add_edge(canonical(w, z)?);
            }
        }
        Ok(vc_decide(&g, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn state(n: u32, k: u32) -> MatchingState {
        MatchingState::new(Config::new(n, k).with_seed(3), PdpsaOptions::audited()).unwrap()
    }

    fn sketched(st: &MatchingState, u: u32) -> BTreeSet<u32> {
        st.view()
            .unwrap()
            .sketched
            .get(&v(u))
            .map_or_else(BTreeSet::new, |s| s.iter().map(|x| x.0).collect())
    }

    #[test]
    fn first_insertion_matches() {
        let mut st = state(6, 2);
        st.insertion(e(1, 2)).unwrap();
        assert_eq!(st.matching(), BTreeSet::from([e(1, 2)]));
        assert_eq!(st.timestamp(v(1)), Some(1));
        assert_eq!(st.timestamp(v(2)), Some(1));
        assert!(st.dict().contains(&e(1, 2)));
        assert_eq!(sketched(&st, 1), BTreeSet::from([2]));
        assert_eq!(sketched(&st, 2), BTreeSet::from([1]));
    }

    #[test]
    fn edge_with_one_matched_endpoint_goes_to_its_sketch_only() {
        let mut st = state(6, 2);
        st.insertion(e(1, 2)).unwrap();
        st.insertion(e(2, 3)).unwrap();
        assert_eq!(sketched(&st, 2), BTreeSet::from([1, 3]));
        assert!(st.sketch(v(3)).is_none());
        assert!(!st.dict().contains(&e(2, 3)));
    }

    #[test]
    fn edge_between_matched_vertices_enters_both_and_dict() {
        let mut st = state(6, 2);
        st.insertion(e(1, 4)).unwrap();
        st.insertion(e(2, 3)).unwrap();
        st.insertion(e(3, 4)).unwrap();
        assert!(st.dict().contains(&e(3, 4)));
        assert!(sketched(&st, 3).contains(&4));
        assert!(sketched(&st, 4).contains(&3));
    }

    #[test]
    fn timestamps_of_successive_matchings_increase() {
        let mut st = state(8, 3);
        st.insertion(e(1, 2)).unwrap();
        st.insertion(e(3, 4)).unwrap();
        assert_eq!(st.timestamp(v(3)), Some(2));
        assert!(st.timestamp(v(1)) < st.timestamp(v(3)));
    }

    #[test]
    fn deleting_older_side_edge_uses_timestamp_rule() {
        let mut st = state(6, 2);
        st.insertion(e(1, 2)).unwrap();
        st.insertion(e(2, 3)).unwrap();
        st.deletion(e(2, 3)).unwrap();
        assert_eq!(sketched(&st, 2), BTreeSet::from([1]));
        assert_eq!(st.sup(v(2)), 1);
    }

    #[test]
    fn deleting_matching_edge_rematches_from_sketch() {
        let mut st = state(6, 2);
        st.insertion(e(1, 2)).unwrap();
        st.insertion(e(2, 3)).unwrap();
        st.deletion(e(1, 2)).unwrap();
        assert_eq!(st.matching(), BTreeSet::from([e(2, 3)]));
        assert!(!st.is_matched(v(1)));
        assert!(st.sketch(v(1)).is_none());
        let ev = st.events();
        assert_eq!(ev.rematches, 1);
        assert_eq!(ev.rematched, 1);
        assert_eq!(ev.delete_neighborhoods, 1);
    }

    #[test]
    fn deleting_isolated_matching_edge_clears_everything() {
        let mut st = state(2, 1);
        st.insertion(e(1, 2)).unwrap();
        st.deletion(e(1, 2)).unwrap();
        assert!(st.matching().is_empty());
        assert!(st.dict().is_empty());
        assert_eq!(st.census().sketches, 0);
        assert_eq!(st.view().unwrap().sketched.len(), 0);
    }

    #[test]
    fn delete_from_ds_case_ladder() {
        // in T: removed from both sketches
        let mut st = state(8, 3);
        st.insertion(e(1, 2)).unwrap();
        st.insertion(e(3, 4)).unwrap();
        st.insertion(e(1, 3)).unwrap();
        assert!(st.dict().contains(&e(1, 3)));
        st.delete_from_ds(e(1, 3));
        assert!(!sketched(&st, 1).contains(&3));
        assert!(!sketched(&st, 3).contains(&1));
        // older side only: (1,5) lands in S_1 while 5 is exposed, then 5 matches
        st.insertion(e(1, 5)).unwrap();
        st.insertion(e(5, 6)).unwrap();
        assert!(!st.dict().contains(&e(1, 5)));
        st.delete_from_ds(e(1, 5));
        assert!(!sketched(&st, 1).contains(&5));
        assert!(!sketched(&st, 5).contains(&1));
        // single matched endpoint
        st.insertion(e(4, 7)).unwrap();
        st.delete_from_ds(e(4, 7));
        assert!(!sketched(&st, 4).contains(&7));
    }

    #[test]
    fn announce_skips_exposed_and_links_matched_neighbours() {
        let mut st = state(8, 3);
        st.announce_neighborhood(v(1)).unwrap();
        assert_eq!(st.events().announcements, 0);
        st.insertion(e(1, 2)).unwrap();
        st.insertion(e(1, 5)).unwrap();
        st.insertion(e(5, 6)).unwrap();
        assert!(!st.dict().contains(&e(1, 5)));
        st.announce_neighborhood(v(1)).unwrap();
        assert!(st.dict().contains(&e(1, 5)));
        assert!(sketched(&st, 5).contains(&1));
    }

    #[test]
    fn delete_neighborhood_moves_unshared_edges() {
        let mut st = state(8, 3);
        st.insertion(e(1, 2)).unwrap();
        st.insertion(e(1, 5)).unwrap();
        st.insertion(e(5, 6)).unwrap();
        st.insertion(e(3, 4)).unwrap();
        st.insertion(e(1, 3)).unwrap();
        // (1,3) is in T; (1,5) only in S_1
        assert!(st.dict().contains(&e(1, 3)));
        assert!(!st.dict().contains(&e(1, 5)));
        st.delete_from_ds(e(1, 2));
        st.mate.remove(&v(1));
        st.mate.remove(&v(2));
        st.delete_neighborhood(v(1)).unwrap();
        assert!(st.sketch(v(1)).is_none());
        assert!(!st.dict().contains(&e(1, 3)));
        assert!(sketched(&st, 3).contains(&1));
        assert!(sketched(&st, 5).contains(&1));
    }

    #[test]
    fn promise_violation_poisons_the_state() {
        let mut st = state(8, 1);
        st.insertion(e(1, 2)).unwrap();
        assert_eq!(
            st.insertion(e(3, 4)),
            Err(Error::PromiseViolation { at: 2 })
        );
        assert_eq!(st.promise(), PromiseReport::Violated { at: 2 });
        assert_eq!(st.query(1), Ok(VcAnswer::PromiseViolation));
        assert!(st.insertion(e(5, 6)).is_err());
    }

    #[test]
    fn empty_query() {
        let st = state(4, 0);
        assert_eq!(st.query(0), Ok(VcAnswer::Yes(Default::default())));
    }

    #[test]
    fn exact_degree_mode_tracks_degrees() {
        let opts = PdpsaOptions {
            degree_mode: DegreeMode::Exact,
            audit: true,
        };
        let mut st = MatchingState::new(Config::new(6, 2), opts).unwrap();
        st.insertion(e(1, 2)).unwrap();
        st.insertion(e(2, 3)).unwrap();
        st.insertion(e(3, 4)).unwrap();
        assert_eq!(st.degree_of(v(3)), 2);
        st.deletion(e(1, 2)).unwrap();
        assert_eq!(st.degree_of(v(2)), 1);
        // 2's only neighbour 3 is matched, so 2 is released into S_3
        assert_eq!(st.matching(), BTreeSet::from([e(3, 4)]));
        assert!(sketched(&st, 3).contains(&2));
    }
}
