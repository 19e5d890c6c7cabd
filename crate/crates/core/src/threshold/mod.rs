//! Combinatorial layer: creation sequences, NSG forms, dense graphs,
//! recognition, enumeration and weight realizations.

mod graph;
mod nsg;
mod recognize;
mod sequence;
mod weights;

pub use graph::{parse_edge_list, DenseGraph, VertexClasses};
pub use nsg::{ClassTag, NsgForm};
pub use recognize::{recognize, recognize_graph, Recognition, StuckSubgraph};
pub use sequence::{enumerate_threshold, enumerated_at, enumeration_count, CreationSequence, Symbol};
pub use weights::WeightRealization;
