use rand::Rng;

use super::field::PolyHash;
use super::one_sparse::{Fingerprint, OneSparseDetector};

/// Number of levels needed for a universe of size `universe`:
/// `ceil(log2 N) + 1`, so the deepest level keeps about one index.
pub fn level_count(universe: u64) -> usize {
    let bits = 64 - universe.saturating_sub(1).leading_zeros() as usize;
    bits + 1
}

/// Independent repetitions giving failure probability at most `delta`,
/// assuming each repetition fails with probability below one half.
pub fn repetitions(delta: f64) -> usize {
    ((1.0 / delta).log2().ceil() as usize).max(1) + 1
}

/// ℓ₀-sampler: per repetition, nested subsampling levels (level `l` keeps an
/// index with probability `2^-l`) each summarised by a one-sparse detector.
///
/// A query scans repetitions in order and, within one repetition, levels from
/// the full vector downward, returning the first one-sparse level. The scan order depends only on
/// which levels are one-sparse, so the returned index is uniform over the
/// support when the hash values are exchangeable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct L0Sampler {
    hashes: Vec<PolyHash>,
    levels: usize,
    detectors: Vec<OneSparseDetector>,
}

impl L0Sampler {
    pub fn new<R: Rng>(rng: &mut R, universe: u64, reps: usize) -> Self {
        let levels = level_count(universe);
        L0Sampler {
            hashes: (0..reps).map(|_| PolyHash::from_rng(rng)).collect(),
            levels,
            detectors: vec![OneSparseDetector::default(); reps * levels],
        }
    }

    #[inline]
    pub fn update(&mut self, index: u64, delta: i64, term: u64) {
        for (rep, hash) in self.hashes.iter().enumerate() {
            let top = hash.level(index, self.levels - 1);
            let row = &mut self.detectors[rep * self.levels..][..=top];
            for d in row {
                d.update(index, delta, term);
            }
        }
    }

    /// An index of the support, or `None` (FAIL).
    pub fn query(&self, key: &Fingerprint, universe: u64) -> Option<u64> {
        self.detectors
            .iter()
            .find_map(|d| d.decode(key, universe))
            .map(|(i, _)| i)
    }

    pub fn detector_count(&self) -> usize {
        self.detectors.len()
    }

    pub fn hash_count(&self) -> usize {
        self.hashes.len()
    }
}
