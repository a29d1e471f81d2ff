use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use super::field::{self, PolyHash};
use super::l0::{self, L0Sampler};
use super::one_sparse::{Fingerprint, OneSparseDetector};
use crate::error::{Error, Result};
use crate::types::Config;

/// Sizing of one [`SampleRecovery`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SketchParams {
    /// Indices live in `[1, universe]`.
    pub universe: u64,
    /// Largest support recovered exactly by peeling.
    pub capacity: usize,
    /// Rows of the peeling grid; each row holds `2 * capacity` buckets.
    pub rows: usize,
    /// Number of independent ℓ₀-samplers.
    pub bank: usize,
    /// Repetitions inside each sampler.
    pub reps: usize,
}

impl SketchParams {
    /// Sketch of a vertex neighbourhood: indices are partner vertex ids,
    /// capacity `x`, and enough samplers for both the high-degree rematch
    /// (`y` draws) and query extraction (`k + 1` distinct draws).
    pub fn neighborhood(cfg: &Config) -> Self {
        SketchParams {
            universe: cfg.n as u64,
            capacity: cfg.x().max(1),
            rows: cfg.recovery_rows(),
            bank: cfg.y().max(2 * (cfg.k as usize + 1)),
            reps: l0::repetitions(cfg.delta),
        }
    }

    /// Recovery-only sketch over an arbitrary universe.
    pub fn recovery(universe: u64, capacity: usize, cfg: &Config) -> Self {
        SketchParams {
            universe,
            capacity: capacity.max(1),
            rows: cfg.recovery_rows(),
            bank: 0,
            reps: l0::repetitions(cfg.delta),
        }
    }

    pub fn buckets(&self) -> usize {
        2 * self.capacity
    }
}

/// Result of drawing from one sampler of the bank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleOutcome {
    Index(u64),
    Fail,
    Empty,
}

/// Rows of buckets with one hash per row; an index lands in one bucket of
/// every row. Decoding peels one-sparse buckets until the grid empties.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RecoveryGrid {
    hashes: Vec<PolyHash>,
    buckets: usize,
    cells: Vec<OneSparseDetector>,
}

impl RecoveryGrid {
    fn new<R: Rng>(rng: &mut R, rows: usize, buckets: usize) -> Self {
        RecoveryGrid {
            hashes: (0..rows).map(|_| PolyHash::from_rng(rng)).collect(),
            buckets,
            cells: vec![OneSparseDetector::default(); rows * buckets],
        }
    }

    #[inline]
    fn update(&mut self, index: u64, delta: i64, term: u64) {
        for (row, h) in self.hashes.iter().enumerate() {
            let b = h.bucket(index, self.buckets);
            self.cells[row * self.buckets + b].update(index, delta, term);
        }
    }

    fn peel(&self, key: &Fingerprint, universe: u64) -> Option<BTreeMap<u64, i64>> {
        let mut cells = self.cells.clone();
        let mut queue: Vec<usize> = (0..cells.len()).filter(|&c| !cells[c].is_zero()).collect();
        let mut found = BTreeMap::new();
        while let Some(c) = queue.pop() {
            let Some((index, value)) = cells[c].decode(key, universe) else {
                continue;
            };
            let term = key.term(index);
            for (row, h) in self.hashes.iter().enumerate() {
                let cell = row * self.buckets + h.bucket(index, self.buckets);
                cells[cell].update(index, -value, term);
                if !cells[cell].is_zero() {
                    queue.push(cell);
                }
            }
            *found.entry(index).or_insert(0) += value;
        }
        found.retain(|_, v| *v != 0);
        cells
            .iter()
            .all(OneSparseDetector::is_zero)
            .then_some(found)
    }
}

/// Linear sketch of a sparse vector over `[1, N]` supporting uniform sampling
/// (through a bank of independent ℓ₀-samplers) and exact recovery of the whole
/// support while it stays within capacity (through a peeling grid). An exact
/// counter tracks the net number of insertions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleRecovery {
    params: SketchParams,
    key: Fingerprint,
    bank: Vec<L0Sampler>,
    grid: RecoveryGrid,
    support: i64,
}

impl SampleRecovery {
    pub fn new(params: SketchParams, seed: u64) -> Self {
        let mut rng = field::rng(seed);
        let key = Fingerprint::new(rng.gen());
        let grid = RecoveryGrid::new(&mut rng, params.rows, params.buckets());
        let bank = (0..params.bank)
            .map(|_| L0Sampler::new(&mut rng, params.universe, params.reps))
            .collect();
        SampleRecovery {
            params,
            key,
            bank,
            grid,
            support: 0,
        }
    }

    pub fn params(&self) -> &SketchParams {
        &self.params
    }

    /// Adds `delta` to coordinate `index`.
    pub fn update(&mut self, index: u64, delta: i64) {
        debug_assert!(index >= 1 && index <= self.params.universe);
        let term = self.key.term(index);
        self.grid.update(index, delta, term);
        for s in &mut self.bank {
            s.update(index, delta, term);
        }
        self.support += delta;
    }

    /// Net number of insertions; equals the support size under valid streams.
    pub fn support(&self) -> i64 {
        self.support
    }

    pub fn bank_size(&self) -> usize {
        self.bank.len()
    }

    /// Draws from sampler `which`. Repeated draws from the same sampler on an
    /// unchanged sketch return the same outcome.
    pub fn sample(&self, which: usize) -> SampleOutcome {
        if self.support == 0 {
            return SampleOutcome::Empty;
        }
        match self.bank[which].query(&self.key, self.params.universe) {
            Some(i) => SampleOutcome::Index(i),
            None => SampleOutcome::Fail,
        }
    }

    /// Recovers every nonzero coordinate with its value.
    pub fn recover_entries(&self) -> Result<BTreeMap<u64, i64>> {
        if self.support == 0 && self.grid.cells.iter().all(OneSparseDetector::is_zero) {
            return Ok(BTreeMap::new());
        }
        let found = self
            .grid
            .peel(&self.key, self.params.universe)
            .ok_or(Error::RecoveryFail)?;
        if found.values().sum::<i64>() != self.support {
            return Err(Error::RecoveryFail);
        }
        Ok(found)
    }

    /// Recovers the support set.
    pub fn recover(&self) -> Result<BTreeSet<u64>> {
        Ok(self.recover_entries()?.into_keys().collect())
    }

    /// Stored machine words: four per detector (count, 128-bit index sum,
    /// fingerprint), four per hash, plus the key and the support counter.
    pub fn words(&self) -> usize {
        let detectors = self.grid.cells.len()
            + self
                .bank
                .iter()
                .map(L0Sampler::detector_count)
                .sum::<usize>();
        let hashes =
            self.grid.hashes.len() + self.bank.iter().map(L0Sampler::hash_count).sum::<usize>();
        4 * detectors + 4 * hashes + 2
    }
}
