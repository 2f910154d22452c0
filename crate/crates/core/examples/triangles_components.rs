//! Triangle counting and weakly connected components on a random graph.

use graphblas::algebra::plus_times_i64;
use graphblas::algorithms::{connected_components, triangle_count};
use graphblas::graphrep::{AdjacencyMatrix, Edge};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> graphblas::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = 60;
    let edges: Vec<Edge<i64>> = (0..70)
        .map(|_| Edge::new(format!("v{}", rng.random_range(0..n)), format!("v{}", rng.random_range(0..n)), 1))
        .collect();
    let names: Vec<String> = (0..n).map(|v| format!("v{v}")).collect();
    let g = AdjacencyMatrix::from_vertices_and_edges(names.iter().map(String::as_str), &edges, &plus_times_i64())?;

    println!("{} vertices, {} stored edges", g.vertex_count(), g.mat.nnz());
    println!("triangles: {}", triangle_count(&g)?);

    let comp = connected_components(&g)?;
    let mut sizes = std::collections::BTreeMap::new();
    for &c in &comp {
        *sizes.entry(c).or_insert(0) += 1;
    }
    let mut by_size: Vec<(usize, usize)> = sizes.into_iter().collect();
    by_size.sort_by_key(|&(_, size)| std::cmp::Reverse(size));
    println!("{} components; largest:", by_size.len());
    for (root, size) in by_size.iter().take(5) {
        println!("  {:<4} {size}", g.label(*root));
    }
    Ok(())
}
