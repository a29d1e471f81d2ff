pub mod dpsa;
pub mod error;
pub mod fvs;
pub mod graph;
pub mod harness;
pub mod kernel;
pub mod pdpsa;
pub mod psa;
pub mod sketch;
pub mod types;

pub use error::{Error, Result};
pub use graph::{Graph, ShadowGraph};
pub use types::{canonical, Config, Cover, Edge, Op, StreamUpdate, VcAnswer, VertexId};
