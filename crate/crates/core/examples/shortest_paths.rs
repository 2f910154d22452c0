//! Multi-source shortest paths as a min-plus fixpoint `D ← D ⊕ AᵀD`.

use graphblas::algebra::min_plus_i64;
use graphblas::algorithms::multi_source_bfs;
use graphblas::graphrep::{AdjacencyMatrix, Edge};

fn main() -> graphblas::Result<()> {
    let roads = [
        ("depot", "north", 4),
        ("depot", "east", 1),
        ("east", "north", 2),
        ("north", "harbor", 5),
        ("east", "harbor", 9),
        ("harbor", "depot", 3),
        ("east", "north", 7),
    ];
    let edges: Vec<Edge<i64>> = roads.iter().map(|&(a, b, w)| Edge::new(a, b, w)).collect();
    // Parallel roads keep the shorter one: duplicates combine with min.
    let g = AdjacencyMatrix::from_edges(&edges, &min_plus_i64())?;

    let sources = ["depot", "harbor"];
    let d = multi_source_bfs(&g, &sources)?;
    println!("converged after {} products", d.iterations);
    print!("{:<8}", "");
    for s in sources {
        print!("{s:>8}");
    }
    println!();
    for v in 0..g.vertex_count() {
        print!("{:<8}", g.label(v));
        for col in 0..sources.len() {
            match d.distance(v, col) {
                Some(x) => print!("{x:>8}"),
                None => print!("{:>8}", "-"),
            }
        }
        println!();
    }
    Ok(())
}
