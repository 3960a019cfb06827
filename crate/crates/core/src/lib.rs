//! Self-complementary split and pseudo-split graphs.
//!
//! Graphs have at most 64 vertices and are stored as one `u64` adjacency row
//! per vertex. The crate covers recognition, construction of the known
//! families, degree-sequence dynamics, exact counting, four-part partitions,
//! and a brute-force census used to cross-check all of the above.

pub mod constructors;
pub mod degree_seq;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod oracle;
pub mod partitions;
pub mod permutation;
pub mod recognition;
pub mod vertex_set;

pub use degree_seq::DegreeSequence;
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, MAX_ORDER};
pub use iso::{find_antimorphism, is_isomorphic, is_self_complementary};
pub use permutation::Permutation;
pub use recognition::{PseudoSplitPartition, SplitPartition};
pub use vertex_set::VertexSet;

/// Exact non-negative counts.
pub type Count = num_bigint::BigUint;
