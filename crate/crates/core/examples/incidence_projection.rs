//! Incidence matrices, hyperedges and the projection onto adjacency.
//!
//! Each row of `E` is one edge: -1 at the tail, +1 at every head. The
//! adjacency matrix is `|Eᵀ < 0| · |E > 0|`, so parallel edges add up.

use graphblas::graphrep::{incidence_to_adjacency, HyperEdge, IncidenceMatrix};

fn main() -> graphblas::Result<()> {
    let edges = [
        HyperEdge::new("e0", "v1", &["v2"]),
        HyperEdge::new("e1", "v1", &["v2"]),
        HyperEdge::new("e2", "v1", &["v2", "v3"]),
        HyperEdge::new("e3", "v3", &["v1"]),
    ];
    let e = IncidenceMatrix::from_edges(&edges)?;

    let header: Vec<&str> = e.vertex_labels.iter().map(|(_, l)| l).collect();
    println!("E       {}", header.join("  "));
    for (k, label) in e.edge_labels.iter() {
        let row: Vec<String> = (0..e.mat.ncols()).map(|v| format!("{:>2}", e.mat.get(k, v).copied().unwrap_or(0))).collect();
        println!("{label:<6} {}", row.join("  "));
    }

    let a = incidence_to_adjacency(&e)?;
    println!("\nadjacency counts:");
    for (i, j, c) in a.mat.iter() {
        println!("  {} -> {}  {c}", a.label(i), a.label(j));
    }
    Ok(())
}
