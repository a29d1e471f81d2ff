//! Unrestricted dynamic streams: a single sparse-recovery sketch over edge
//! indices with capacity about `nk`, plus a live-edge counter.
//!
//! A graph with a vertex cover of size `k` has at most `nk` edges, so the
//! query rejects outright above that count and otherwise recovers the whole
//! edge set and decides it exactly.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kernel::vc_decide;
use crate::sketch::{field, level_count, PolyHash, SampleRecovery, SketchParams};
use crate::types::{Config, Edge, StreamUpdate, VcAnswer};

/// Capacity multiplier used when the gate relies on the distinct-edge
/// estimate instead of the exact counter.
pub const APPROX_SLACK: f64 = 1.01;

/// Whether a query went through full recovery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recovery {
    /// Rejected by the edge-count gate.
    Skipped,
    Performed {
        edges: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpsaOutcome {
    pub answer: VcAnswer,
    pub recovery: Recovery,
}

/// Distinct-element estimator: level `l` sees the indices whose hash level is
/// at least `l` (a `2^-l` subsample) in a recovery sketch of fixed capacity.
/// The estimate is the recovered count at the first recoverable level,
/// scaled by `2^l`; it is exact while the distinct count fits level 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctEstimator {
    hash: PolyHash,
    levels: Vec<SampleRecovery>,
}

impl DistinctEstimator {
    pub fn new(universe: u64, capacity: usize, cfg: &Config) -> Self {
        let mut rng = field::rng(field::derive_seed(cfg.seed, &[0xE5]));
        let hash = PolyHash::from_rng(&mut rng);
        let params = SketchParams::recovery(universe, capacity, cfg);
        let levels = (0..level_count(universe))
            .map(|_| SampleRecovery::new(params, rng.gen()))
            .collect();
        DistinctEstimator { hash, levels }
    }

    pub fn update(&mut self, index: u64, delta: i64) {
        let top = self.hash.level(index, self.levels.len() - 1);
        for s in &mut self.levels[..=top] {
            s.update(index, delta);
        }
    }

    pub fn estimate(&self) -> Result<u64> {
        self.levels
            .iter()
            .enumerate()
            .find_map(|(l, s)| s.recover().ok().map(|set| (set.len() as u64) << l))
            .ok_or(Error::EstimateFail)
    }

    pub fn words(&self) -> usize {
        4 + self.levels.iter().map(SampleRecovery::words).sum::<usize>()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DpsaState {
    cfg: Config,
    global: SampleRecovery,
    live: i64,
    estimator: Option<DistinctEstimator>,
}

impl DpsaState {
    /// Exact-counter mode: assumes each edge is inserted at most once while
    /// live.
    pub fn new(cfg: Config) -> Result<Self> {
        Self::build(cfg, false)
    }

    /// Duplicate-tolerant mode: the gate uses the distinct-edge estimate and
    /// capacity carries a 1% slack.
    pub fn new_approx(cfg: Config) -> Result<Self> {
        Self::build(cfg, true)
    }

    fn build(cfg: Config, approx: bool) -> Result<Self> {
        cfg.validate()?;
        let universe = Edge::universe(cfg.n).max(1);
        let nk = cfg.n as f64 * cfg.k as f64;
        let slack = if approx { APPROX_SLACK } else { 1.0 };
        let capacity = (slack * nk).ceil() as usize;
        let params = SketchParams::recovery(universe, capacity, &cfg);
        let global = SampleRecovery::new(params, field::derive_seed(cfg.seed, &[0xD5]));
        let estimator = approx.then(|| DistinctEstimator::new(universe, capacity, &cfg));
        Ok(DpsaState {
            cfg,
            global,
            live: 0,
            estimator,
        })
    }

    pub fn config(&self) -> &Config {
        &self.cfg
    }

    pub fn is_approx(&self) -> bool {
        self.estimator.is_some()
    }

    /// Net number of insertions.
    pub fn live(&self) -> i64 {
        self.live
    }

    pub fn capacity(&self) -> usize {
        self.global.params().capacity
    }

    pub fn words(&self) -> usize {
        1 + self.global.words() + self.estimator.as_ref().map_or(0, DistinctEstimator::words)
    }

    pub fn update(&mut self, up: StreamUpdate) {
        let index = up.edge.index(self.cfg.n);
        self.global.update(index, up.delta());
        if let Some(est) = &mut self.estimator {
            est.update(index, up.delta());
        }
        self.live += up.delta();
    }

    /// Estimated number of distinct live edges; requires approx mode.
    pub fn distinct_edge_estimate(&self) -> Result<u64> {
        self.estimator
            .as_ref()
            .ok_or_else(|| Error::InvalidConfig("distinct estimate needs approx mode".into()))?
            .estimate()
    }

    /// Rejects above `n * k` edges, otherwise recovers every live edge and
    /// decides the recovered graph.
    pub fn query(&self, k: u32) -> Result<DpsaOutcome> {
        let count = match &self.estimator {
            Some(est) => est.estimate()? as i64,
            None => self.live,
        };
        if count > self.cfg.n as i64 * k as i64 {
            return Ok(DpsaOutcome {
                answer: VcAnswer::No,
                recovery: Recovery::Skipped,
            });
        }
        let edges = self.recover_edges()?;
        let g = Graph::from_edges(edges.iter().copied());
        Ok(DpsaOutcome {
            answer: vc_decide(&g, k),
            recovery: Recovery::Performed { edges: edges.len() },
        })
    }

    /// The live edge set, when it fits the sketch.
    pub fn recover_edges(&self) -> Result<BTreeSet<Edge>> {
        self.global
            .recover()?
            .into_iter()
            .map(|i| Edge::from_index(self.cfg.n, i).map_err(|_| Error::RecoveryFail))
            .collect()
    }
}

pub fn dpsa_update(st: &mut DpsaState, up: StreamUpdate) {
    st.update(up)
}

pub fn dpsa_query(st: &DpsaState, k: u32) -> Result<DpsaOutcome> {
    st.query(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::Cover;

    fn e(a: u32, b: u32) -> Edge {
        Edge::new(a, b).unwrap()
    }

    fn complete(n: u32) -> Vec<Edge> {
        (1..=n)
            .flat_map(|a| ((a + 1)..=n).map(move |b| e(a, b)))
            .collect()
    }

    #[test]
    fn insert_then_delete_is_fresh() {
        let fresh = DpsaState::new(Config::new(6, 2)).unwrap();
        let mut st = fresh.clone();
        st.update(StreamUpdate::insert(e(2, 5)));
        st.update(StreamUpdate::delete(e(2, 5)));
        assert_eq!(st, fresh);
    }

    #[test]
    fn live_counter_goes_past_nk() {
        let mut st = DpsaState::new(Config::new(6, 2)).unwrap();
        for edge in complete(6).into_iter().take(13) {
            st.update(StreamUpdate::insert(edge));
        }
        assert_eq!(st.live(), 13);
    }

    #[test]
    fn complete_graph_rejected_by_gate() {
        let mut st = DpsaState::new(Config::new(6, 2)).unwrap();
        for edge in complete(6) {
            st.update(StreamUpdate::insert(edge));
        }
        let out = st.query(2).unwrap();
        assert_eq!(out.answer, VcAnswer::No);
        assert_eq!(out.recovery, Recovery::Skipped);
    }

    #[test]
    fn empty_stream_yes() {
        let st = DpsaState::new(Config::new(5, 0)).unwrap();
        let out = st.query(0).unwrap();
        assert_eq!(out.answer, VcAnswer::Yes(Cover::new()));
        assert_eq!(out.recovery, Recovery::Performed { edges: 0 });
    }

    #[test]
    fn star_recovered_and_decided() {
        let mut st = DpsaState::new(Config::new(8, 1)).unwrap();
        for leaf in 2..=8 {
            st.update(StreamUpdate::insert(e(1, leaf)));
        }
        st.update(StreamUpdate::delete(e(1, 8)));
        let out = st.query(1).unwrap();
        assert_eq!(out.recovery, Recovery::Performed { edges: 6 });
        assert_eq!(out.answer.cover().unwrap().len(), 1);
    }

    #[test]
    fn distinct_estimate_ignores_duplicates() {
        let mut st = DpsaState::new_approx(Config::new(10, 2)).unwrap();
        assert_eq!(st.distinct_edge_estimate(), Ok(0));
        for edge in complete(10).into_iter().take(15) {
            st.update(StreamUpdate::insert(edge));
            st.update(StreamUpdate::insert(edge));
        }
        assert_eq!(st.live(), 30);
        assert_eq!(st.distinct_edge_estimate(), Ok(15));
        assert!(st.query(2).unwrap().recovery != Recovery::Skipped);
    }

    #[test]
    fn estimate_requires_approx_mode() {
        let st = DpsaState::new(Config::new(4, 1)).unwrap();
        assert!(st.distinct_edge_estimate().is_err());
    }
}
