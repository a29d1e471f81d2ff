//! Shared domain types: vertices, canonical edges, stream updates, run
//! configuration and the answer type returned by every decision procedure.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A vertex of the fixed universe `[1, n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// An undirected edge stored canonically with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

/// Canonical form of the unordered pair `{u, v}`.
pub fn canonical(u: VertexId, v: VertexId) -> Result<Edge> {
    match u.cmp(&v) {
        std::cmp::Ordering::Less => Ok(Edge { u, v }),
        std::cmp::Ordering::Greater => Ok(Edge { u: v, v: u }),
        std::cmp::Ordering::Equal => Err(Error::SelfLoop(u)),
    }
}

impl Edge {
    pub fn new(u: u32, v: u32) -> Result<Self> {
        canonical(VertexId(u), VertexId(v))
    }

    /// Smaller endpoint.
    pub fn u(self) -> VertexId {
        self.u
    }

    /// Larger endpoint.
    pub fn v(self) -> VertexId {
        self.v
    }

    pub fn endpoints(self) -> [VertexId; 2] {
        [self.u, self.v]
    }

    pub fn touches(self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint that is not `w`. Caller guarantees `w` is an endpoint.
    pub fn other(self, w: VertexId) -> VertexId {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    /// Number of distinct edges over `n` vertices.
    pub fn universe(n: u32) -> u64 {
        let n = n as u64;
        n * n.saturating_sub(1) / 2
    }

    /// Rank of the edge in `[1, n(n-1)/2]`, row-major over `u < v`.
    pub fn index(self, n: u32) -> u64 {
        let (u, v, n) = (self.u.0 as u64, self.v.0 as u64, n as u64);
        (u - 1) * n - (u - 1) * u / 2 + (v - u)
    }

    /// Inverse of [`Edge::index`].
    pub fn from_index(n: u32, index: u64) -> Result<Self> {
        if index == 0 || index > Self::universe(n) {
            return Err(Error::InvalidConfig(format!(
                "edge index {index} outside [1, {}]",
                Self::universe(n)
            )));
        }
        let n64 = n as u64;
        let mut rest = index;
        for u in 1..n64 {
            let row = n64 - u;
            if rest <= row {
                return Edge::new(u as u32, (u + rest) as u32);
            }
            rest -= row;
        }
        unreachable!("index bounded by universe")
    }

    pub fn check_range(self, n: u32) -> Result<()> {
        match self.endpoints().into_iter().find(|w| w.0 == 0 || w.0 > n) {
            Some(w) => Err(Error::VertexOutOfRange { vertex: w.0, n }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Insert,
    Delete,
}

/// One stream element. Its timestamp is its 1-based position in the stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamUpdate {
    pub op: Op,
    pub edge: Edge,
}

impl StreamUpdate {
    pub fn insert(edge: Edge) -> Self {
        StreamUpdate {
            op: Op::Insert,
            edge,
        }
    }

    pub fn delete(edge: Edge) -> Self {
        StreamUpdate {
            op: Op::Delete,
            edge,
        }
    }

    pub fn delta(self) -> i64 {
        match self.op {
            Op::Insert => 1,
            Op::Delete => -1,
        }
    }
}

/// Run configuration. Sketch sizes are derived on demand from these fields.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub n: u32,
    pub k: u32,
    /// Failure probability, in (0, 1).
    pub delta: f64,
    /// Stream-length exponent: the stream has at most `n^c` updates.
    pub c: f64,
    /// Multiplier applied to the derived sketch sizes.
    pub alpha: f64,
    pub seed: u64,
}

impl Config {
    pub fn new(n: u32, k: u32) -> Self {
        Config {
            n,
            k,
            delta: 0.01,
            c: 1.0,
            alpha: 1.0,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_delta(mut self, delta: f64) -> Self {
        self.delta = delta;
        self
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = alpha;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidConfig("n must be positive".into()));
        }
        if self.delta.is_nan() || self.delta <= 0.0 || self.delta >= 1.0 {
            return Err(Error::InvalidConfig(format!(
                "delta must lie in (0,1), got {}",
                self.delta
            )));
        }
        if self.c.is_nan() || self.c < 1.0 {
            return Err(Error::InvalidConfig(format!(
                "c must be >= 1, got {}",
                self.c
            )));
        }
        if self.alpha.is_nan() || self.alpha <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "alpha must be positive, got {}",
                self.alpha
            )));
        }
        Ok(())
    }

    /// `log2(n / delta)`.
    pub fn log_term(&self) -> f64 {
        (self.n as f64 / self.delta).log2()
    }

    /// Low/high degree threshold and per-vertex sketch capacity:
    /// `ceil(alpha * 8 c k log2(n/delta))`.
    pub fn x(&self) -> usize {
        (self.alpha * 8.0 * self.c * self.k as f64 * self.log_term()).ceil() as usize
    }

    /// Number of samples drawn when rematching a high-degree vertex:
    /// `ceil(alpha * 8 c log2(n/delta))`.
    pub fn y(&self) -> usize {
        (self.alpha * 8.0 * self.c * self.log_term()).ceil() as usize
    }

    /// Rows of a recovery grid: `ceil(log2(n/delta))`, at least 3.
    pub fn recovery_rows(&self) -> usize {
        (self.log_term().ceil() as usize).max(3)
    }
}

pub type Cover = BTreeSet<VertexId>;

/// Outcome of a vertex cover decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VcAnswer {
    /// A cover of size at most `k`.
    Yes(Cover),
    No,
    PromiseViolation,
}

impl VcAnswer {
    pub fn is_yes(&self) -> bool {
        matches!(self, VcAnswer::Yes(_))
    }

    pub fn cover(&self) -> Option<&Cover> {
        match self {
            VcAnswer::Yes(c) => Some(c),
            _ => None,
        }
    }
}
