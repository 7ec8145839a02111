//! Mixed graphs, circulant digraphs and the `H_q` construction.

mod circulant;
mod graph;
mod hq;

pub use circulant::build_circulant_digraph;
pub use graph::{DegreeProfile, LinkKind, MixedGraph, VertexDegree};
pub use hq::{build_hq, jump_count, Hq, HqParams, JumpCount};
