//! Linear sketches over sparse vectors indexed by `[1, N]`.
//!
//! Every structure here is linear in its updates: the state after a multiset
//! of `±1` updates does not depend on their order, and an update followed by
//! its inverse restores the previous state exactly.

pub mod field;
mod l0;
mod one_sparse;
mod recovery;

pub use field::PolyHash;
pub use l0::{level_count, repetitions, L0Sampler};
pub use one_sparse::{Fingerprint, OneSparseDetector};
pub use recovery::{SampleOutcome, SampleRecovery, SketchParams};
