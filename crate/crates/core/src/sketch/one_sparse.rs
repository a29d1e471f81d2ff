use super::field::{self, PRIME};

/// Random evaluation point shared by every detector of one sketch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fingerprint {
    base: u64,
}

impl Fingerprint {
    pub fn new(base: u64) -> Self {
        Fingerprint {
            base: 2 + base % (PRIME - 3),
        }
    }

    /// `base^index mod p`.
    #[inline]
    pub fn term(&self, index: u64) -> u64 {
        field::pow(self.base, index)
    }
}

/// Linear one-sparse test over a vector indexed by `[1, N]`.
///
/// Holds `sum x_i`, `sum i * x_i` and `sum x_i * r^i mod p`. A vector with a
/// single nonzero `w` at `i` produces `(w, w*i, w*r^i)`; any other vector
/// passes the fingerprint test with probability at most `N/p` over `r`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OneSparseDetector {
    count: i64,
    index_sum: i128,
    fingerprint: u64,
}

impl OneSparseDetector {
    /// Adds `delta` at `index`; `term` must be `Fingerprint::term(index)`.
    #[inline]
    pub fn update(&mut self, index: u64, delta: i64, term: u64) {
        self.count += delta;
        self.index_sum += delta as i128 * index as i128;
        let weighted = field::mul(field::from_signed(delta), term);
        self.fingerprint = field::add(self.fingerprint, weighted);
    }

    pub fn is_zero(&self) -> bool {
        self.count == 0 && self.index_sum == 0 && self.fingerprint == 0
    }

    pub fn count(&self) -> i64 {
        self.count
    }

    /// `Some((index, value))` when the sketched vector looks one-sparse.
    pub fn decode(&self, key: &Fingerprint, universe: u64) -> Option<(u64, i64)> {
        if self.count == 0 || self.index_sum % self.count as i128 != 0 {
            return None;
        }
        let index = self.index_sum / self.count as i128;
        if index < 1 || index > universe as i128 {
            return None;
        }
        let index = index as u64;
        let expect = field::mul(field::from_signed(self.count), key.term(index));
        (expect == self.fingerprint).then_some((index, self.count))
    }
}
