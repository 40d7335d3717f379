//! Multigraphs and multi-hypergraphs on at most 64 vertices.

mod canon;
mod containment;
pub mod format;
mod hypergraph;
mod indexed;
mod ops;
mod vertex_set;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, Labeling};
pub use containment::{contains, Matcher};
pub use hypergraph::{EdgeKey, MultiHypergraph, MAX_VERTICES};
pub use indexed::IndexedGraph;
pub use ops::{bfs_distances, components, contract, is_connected, is_sunflower, simplify, Simplify};
pub use vertex_set::VertexSet;
