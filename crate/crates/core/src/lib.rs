//! Semiring-generic sparse matrices and graph algorithms built on them.
//!
//! The crate is organized bottom-up:
//!
//! - [`algebra`]: scalar domains and [`Semiring`]s (`plus_times`, `or_and`,
//!   `min_plus`, `max_plus`, `max_min`), with randomized flag verification.
//! - [`matrix`]: [`Triples`], the CSR [`SparseMatrix`] and [`SparseVector`],
//!   construction (`sparse_build`), extraction (`find`) and `transpose`.
//! - [`kernels`]: `spgemm`, `spmv`, element-wise `⊕`/`⊗`, `sp_ref`,
//!   `sp_asgn`, `apply` and `reduce`, plus the executable law suite in
//!   [`kernels::laws`].
//! - [`graphrep`]: adjacency and incidence matrices built from labeled
//!   edges, and the incidence → adjacency projection.
//! - [`algorithms`]: BFS, multi-source weighted BFS, PageRank, connected
//!   components and triangle counting, written only with the operations
//!   above.
//! - [`io`], [`generate`], [`bench`], [`cli`]: file formats, the Kronecker
//!   generator, the scaling harness and the command-line surface.
//!
//! ```
//! use graphblas::algebra::plus_times_i64;
//! use graphblas::algorithms::bfs;
//! use graphblas::graphrep::{AdjacencyMatrix, Edge};
//!
//! let edges = [Edge::new("alice", "bob", 1), Edge::new("alice", "carl", 1)];
//! let g = AdjacencyMatrix::from_edges(&edges, &plus_times_i64()).unwrap();
//! let levels = bfs(&g, "alice").unwrap().levels;
//! assert_eq!(levels.values(), &[0, 1, 1]);
//! ```

pub mod algebra;
pub mod algorithms;
pub mod bench;
pub mod cli;
pub mod error;
pub mod generate;
pub mod graphrep;
pub mod io;
pub mod kernels;
pub mod matrix;
pub mod random;

pub use algebra::{AnySemiring, BuiltinSemiring, Scalar, Semiring};
pub use error::{Error, Result};
pub use matrix::{SparseMatrix, SparseVector, Triples};
