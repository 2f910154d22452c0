//! Graph algorithms written purely in terms of the matrix operation set.
//!
//! Edges follow the row → column convention, so expanding a frontier along
//! out-edges multiplies by the transposed adjacency matrix.

mod bfs;
mod components;
mod pagerank;
mod sssp;
mod triangles;

pub use bfs::{bfs, BfsResult};
pub use components::connected_components;
pub use pagerank::{pagerank, PageRankConfig};
pub use sssp::{multi_source_bfs, multi_source_bfs_indices, DistanceMatrix};
pub use triangles::triangle_count;
