//! Breadth-first search as repeated sparse matrix-vector products.
//!
//! Two edges, alice -> bob and alice -> carl. One product over the Boolean
//! semiring moves the frontier from alice to both neighbors.

use graphblas::algebra::{or_and_bool, plus_times_i64};
use graphblas::algorithms::bfs;
use graphblas::graphrep::{AdjacencyMatrix, Edge};
use graphblas::kernels::spmv;
use graphblas::matrix::{transpose, SparseVector};

fn main() -> graphblas::Result<()> {
    let edges = [Edge::new("alice", "bob", 1i64), Edge::new("alice", "carl", 1)];
    let g = AdjacencyMatrix::from_edges(&edges, &plus_times_i64())?;

    println!("adjacency (row -> column):");
    for (i, j, w) in g.mat.iter() {
        println!("  {} -> {}  weight {w}", g.label(i), g.label(j));
    }

    // One step by hand: x selects alice, Aᵀx marks her out-neighbors.
    let pattern = graphblas::kernels::apply(&g.mat, |_| Some(true));
    let x = SparseVector::unit(g.vertex_count(), g.vertex("alice")?, true)?;
    let next = spmv(&transpose(&pattern), &x, &or_and_bool())?;
    let reached: Vec<&str> = next.indices().iter().map(|&v| g.label(v)).collect();
    println!("\none step from alice reaches {reached:?}");

    let levels = bfs(&g, "alice")?;
    println!("\nbfs levels:");
    for (v, level) in levels.levels.iter() {
        println!("  {:<6} {level}", g.label(v));
    }
    Ok(())
}
