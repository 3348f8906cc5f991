//! Interval spectra of edge labelings.
//!
//! A labeling assigns distinct positive integers to the edges of a simple
//! connected graph. The spectrum of a vertex is the set of labels on its
//! incident edges, and a vertex is an interval vertex when that set is a
//! run of consecutive integers. This crate computes interval vertices,
//! classifies the subgraph they induce (a forest of single vertices and
//! caterpillars with restricted leaves), follows gradient paths through it,
//! and checks those structural facts exhaustively or by sampling.

pub mod census;
pub mod classify;
pub mod enumerate;
pub mod galaxy;
pub mod gradient;
pub mod graph;
pub mod labeling;
pub mod optimize;

pub use classify::{check_theorem, ComponentClass, Overall, TheoremVerdict, ViolationReason};
pub use galaxy::{build_galaxy, decompose_galaxy, galaxy_labeling, is_galaxy, GalaxyDecomposition};
pub use graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6, Graph, GraphError, VertexSet};
pub use labeling::{interval_vertices, Labeling, LabelingError, Spectrum};
