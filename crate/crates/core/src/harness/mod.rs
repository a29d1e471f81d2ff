//! Stream files, generators, oracles, the invariant checker and the CLI.

pub mod cli;
pub mod gen;
pub mod invariants;
pub mod oracle;
pub mod stream_file;

pub use invariants::{check_invariants, Violation};
pub use oracle::{min_fvs, min_vertex_cover, oracle_fvs, oracle_vc};
pub use stream_file::{emit_stream, parse_stream, Item, Mode, StreamFile};
