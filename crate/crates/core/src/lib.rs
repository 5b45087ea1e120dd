//! Edge-colored graphs, simple digraphs and standard multigraphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: the immutable graph types and their exact degree arithmetic.
//! * [`transforms`]: edge-minimal reduction, `(G, c, m)`-digraphs, 2-cycle
//!   graphs, complements and head colorings of orientations.
//! * [`patterns`]: exact searchers for rainbow cliques and joins, doubled
//!   near-cliques and cyclic triangles.
//! * [`constructions`]: the explicit colorings used as controls.
//! * [`verify`]: small-n enumeration campaigns and the multigraph predicates.

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod patterns;
pub mod transforms;
pub mod verify;

pub use bitset::VertexSet;
pub use error::GraphError;
pub use graph::{
    ColorDegreeProfile, Color, EdgeColoredGraph, MultigraphStats, Rational, SimpleDigraph, SimpleGraph,
    StandardMultigraph,
};
